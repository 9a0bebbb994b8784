"""Receiver performance for pure coherent-state signal sets.

All operators live in the signal subspace. The working frame is the one in
which the signal states are the columns of ``B = G^{1/2}`` (the Hermitian
square root of the plain Gram matrix), so ``B^H B = G`` and POVM vectors are
M-dimensional coordinate vectors in that frame. In this frame the square-root
measurement vectors are simply the projections of the standard basis onto
the signal span.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass

import numpy as np
from scipy.special import erfc
from scipy.stats import norm

from .states import gram, is_psk, psd_sqrt, psk_spectrum

OPT_RESIDUAL = 1e-8
OPT_EIG_FLOOR = -1e-8


@dataclass(frozen=True)
class Povm:
    """Rank-one POVM ``Pi_l = |mu_l><mu_l|``; column ``l`` of ``vectors`` is mu_l."""

    vectors: np.ndarray
    completeness_defect: float

    @property
    def n_outcomes(self):
        return self.vectors.shape[1]

    def elements(self):
        v = self.vectors
        return np.einsum("il,jl->lij", v, v.conj())


@dataclass(frozen=True)
class ChannelMatrix:
    """Row-stochastic matrix ``p[i, j] = P(j|i)`` with its input priors."""

    p: np.ndarray
    input_priors: np.ndarray

    def __post_init__(self):
        p = np.asarray(self.p, dtype=float)
        xi = np.asarray(self.input_priors, dtype=float)
        if p.ndim != 2 or p.shape[0] != xi.size:
            raise ValueError("channel shape does not match the priors")
        if np.any(p < -1e-15) or np.any(p > 1 + 1e-12):
            raise ValueError("channel entries must lie in [0, 1]")
        if np.max(np.abs(p.sum(axis=1) - 1.0)) > 1e-12:
            raise ValueError("channel rows must sum to 1")
        if abs(xi.sum() - 1.0) > 1e-12:
            raise ValueError("input priors must sum to 1")
        object.__setattr__(self, "p", np.clip(p, 0.0, 1.0))
        object.__setattr__(self, "input_priors", xi)

    def to_csv(self):
        """CSV with corner label ``j\\i``: one row per output j, one column per input i."""
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        n_in, n_out = self.p.shape
        w.writerow(["j\\i"] + [str(i) for i in range(n_in)])
        for j in range(n_out):
            w.writerow([str(j)] + [f"{self.p[i, j]:.12g}" for i in range(n_in)])
        return buf.getvalue()

    def to_json(self):
        return json.dumps({"p": self.p.tolist(), "input_priors": self.input_priors.tolist()})


def signal_frame(c):
    """Columns are the signal states in an orthonormal frame of their span."""
    return psd_sqrt(gram(c, "plain").entries)


def _range_projector(c, rtol=1e-13):
    w, v = np.linalg.eigh(gram(c, "plain").entries)
    keep = w > rtol * max(w.max(), 1.0)
    return v[:, keep] @ v[:, keep].conj().T


def make_povm(vectors, c):
    """Wrap POVM vectors, recording ``|| sum Pi - I_span ||``."""
    vectors = np.asarray(vectors, dtype=complex)
    total = vectors @ vectors.conj().T
    defect = float(np.linalg.norm(total - _range_projector(c), 2))
    return Povm(vectors, defect)


def channel_from_povm(c, povm):
    """``P(j|i) = |<mu_j|psi_i>|^2`` as a ChannelMatrix."""
    b = signal_frame(c)
    amp = povm.vectors.conj().T @ b
    p = (np.abs(amp) ** 2).T
    p = p / p.sum(axis=1, keepdims=True)
    return ChannelMatrix(p, c.priors)


def srm_povm(c):
    """Square-root measurement ``mu_l = Gamma^{-1/2} |psi_l>`` (pseudo-inverse on the null space)."""
    a = c.amplitudes
    if np.all(np.abs(a - a[0]) < 1e-12):
        raise ValueError("SRM undefined: all signal states are identical")
    g = gram(c, "plain").entries
    b = psd_sqrt(g)
    mu = psd_sqrt(g, pinv=True) @ b
    return make_povm(mu, c)


def srm_channel(c):
    """SRM channel ``P(j|i) = |(G^{1/2})_{ji}|^2``."""
    a = c.amplitudes
    if np.all(np.abs(a - a[0]) < 1e-12):
        raise ValueError("SRM undefined: all signal states are identical")
    root = psd_sqrt(gram(c, "plain").entries)
    p = np.abs(root.T) ** 2
    p = p / p.sum(axis=1, keepdims=True)
    return ChannelMatrix(p, c.priors)


def psk_srm_row(M, Ns):
    """``P(j|0)`` of the SRM on uniform M-PSK, computed through the DFT.

    The Gram matrix is circulant, so its square root is the circulant whose
    first row is the inverse DFT of sqrt(eigenvalues). O(M log M).
    """
    lam = psk_spectrum(M, Ns)
    row = np.abs(np.fft.ifft(np.sqrt(lam))) ** 2
    return row / row.sum()


def helstrom_binary(c):
    """Minimum error probability for a binary pure-state set, any priors.

    Evaluated as ``x / (2 (1 + sqrt(1-x)))`` with ``x = 4 xi0 xi1 |<psi0|psi1>|^2``,
    which equals ``(1 - sqrt(1-x))/2`` without the cancellation.
    """
    if c.M != 2:
        raise ValueError("Helstrom bound needs exactly two states")
    k2 = abs(gram(c, "plain").entries[0, 1]) ** 2
    x = 4.0 * c.priors[0] * c.priors[1] * k2
    x = min(x, 1.0)
    return float(x / (2.0 * (1.0 + np.sqrt(1.0 - x))))


def helstrom_povm(c):
    """Projective Bayes-optimal measurement for two pure states."""
    if c.M != 2:
        raise ValueError("Helstrom measurement needs exactly two states")
    b = signal_frame(c)
    xi = c.priors
    lam = xi[0] * np.outer(b[:, 0], b[:, 0].conj()) - xi[1] * np.outer(b[:, 1], b[:, 1].conj())
    w, v = np.linalg.eigh(lam)
    # eigh sorts ascending: the positive eigenvector decides for state 0
    return make_povm(v[:, ::-1], c)


def covariant_optimal_pe(c):
    """Optimum error of a uniform PSK set, ``1 - (sum_m sqrt(lam_m))^2 / M^2``.

    lam_m is the DFT of the first Gram row with w = exp(2j*pi/M).
    """
    if not c.is_uniform:
        raise ValueError("covariant formula requires uniform priors")
    if not is_psk(c):
        raise ValueError("covariant formula requires a PSK constellation")
    Ns = float(abs(c.amplitudes[0]) ** 2)
    lam = psk_spectrum(c.M, Ns)
    return float(max(0.0, 1.0 - np.sqrt(lam).sum() ** 2 / c.M**2))


def homodyne_binary_pe(amplitude, priors=(0.5, 0.5)):
    """Likelihood-ratio test on a quadrature with means +/-|alpha| and variance 1/4."""
    a = abs(complex(amplitude))
    xi0, xi1 = priors
    sigma = 0.5
    if a == 0.0:
        return float(min(xi0, xi1))
    t = sigma**2 * np.log(xi1 / xi0) / (2.0 * a)
    return float(xi0 * norm.cdf((t - a) / sigma) + xi1 * norm.sf((t + a) / sigma))


def homodyne_bpsk_pe(Ns):
    """``Q(2 sqrt(Ns))`` for antipodal states with equal priors."""
    if Ns < 0:
        raise ValueError("Ns must be non-negative")
    return float(0.5 * erfc(np.sqrt(2.0 * Ns)))


@dataclass(frozen=True)
class OptimalityReport:
    commutator_residual: float
    min_eigenvalue: float
    conditional_spread: float = 0.0
    minimax: bool = False

    @property
    def optimal(self):
        ok = self.commutator_residual < OPT_RESIDUAL and self.min_eigenvalue > OPT_EIG_FLOOR
        if self.minimax:
            ok = ok and self.conditional_spread < OPT_RESIDUAL
        return ok


def _bayes_residuals(c, povm):
    if povm.n_outcomes != c.M:
        raise ValueError("Bayes conditions need one POVM element per hypothesis")
    b = signal_frame(c)
    xi = c.priors
    rho = np.einsum("im,jm->mij", b, b.conj())
    pis = povm.elements()
    weighted = xi[:, None, None] * rho
    worst = 0.0
    for m in range(c.M):
        for l in range(c.M):
            r = pis[m] @ (weighted[m] - weighted[l]) @ pis[l]
            worst = max(worst, float(np.linalg.norm(r, 2)))
    gamma = sum(weighted[l] @ pis[l] for l in range(c.M))
    gamma_h = 0.5 * (gamma + gamma.conj().T)
    min_eig = min(float(np.linalg.eigvalsh(gamma_h - weighted[l]).min()) for l in range(c.M))
    return worst, min_eig, rho, pis


def check_bayes_optimality(c, povm):
    """Residuals of the Bayes-rule optimality conditions.

    Returns the largest ``||Pi_m (xi_m rho_m - xi_l rho_l) Pi_l||`` and the
    smallest eigenvalue of ``gamma - xi_l rho_l`` with
    ``gamma = sum_l xi_l rho_l Pi_l``.
    """
    worst, min_eig, _, _ = _bayes_residuals(c, povm)
    return OptimalityReport(worst, min_eig)


def check_minimax(c, povm):
    """Bayes residuals plus the spread of ``Tr Pi_l rho_l`` over l."""
    worst, min_eig, rho, pis = _bayes_residuals(c, povm)
    correct = np.array([np.trace(pis[l] @ rho[l]).real for l in range(c.M)])
    return OptimalityReport(worst, min_eig, float(correct.max() - correct.min()), minimax=True)


def symbol_error(ch):
    """Average error ``1 - sum_i xi_i P(i|i)`` of a square channel."""
    return float(1.0 - np.dot(ch.input_priors, np.diag(ch.p)))

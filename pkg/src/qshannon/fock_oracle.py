"""Truncated number-basis representations used to cross-check closed forms.

Everything here works on explicit state vectors and density matrices in the
photon-number basis, deliberately avoiding the Gram-matrix shortcuts used by
the rest of the package.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import gammaln
from scipy.stats import poisson

MAX_ENERGY = 100.0
TAIL_TOL = 1e-12
NORM_TOL = 1e-10


def auto_nmax(energy):
    return int(math.ceil(energy + 10.0 * math.sqrt(energy) + 20.0))


@dataclass(frozen=True)
class FockVector:
    coefficients: np.ndarray
    n_max: int

    def padded(self, n_max):
        if n_max < self.n_max:
            raise ValueError("cannot pad to a smaller truncation")
        out = np.zeros(n_max + 1, dtype=complex)
        out[: self.n_max + 1] = self.coefficients
        return out

    @property
    def norm(self):
        return float(np.linalg.norm(self.coefficients))


def coherent_fock(alpha, n_max=None):
    """Number-basis coefficients ``exp(-|a|^2/2) a^n / sqrt(n!)``, n = 0..n_max."""
    alpha = complex(alpha)
    energy = abs(alpha) ** 2
    if energy > MAX_ENERGY:
        raise ValueError(f"|alpha|^2 = {energy} exceeds the oracle limit {MAX_ENERGY}")
    if n_max is None:
        n_max = auto_nmax(energy)
    n = np.arange(n_max + 1)
    if energy == 0.0:
        c = np.zeros(n_max + 1, dtype=complex)
        c[0] = 1.0
    else:
        logmag = -0.5 * energy + n * math.log(abs(alpha)) - 0.5 * gammaln(n + 1)
        c = np.exp(logmag) * np.exp(1j * n * np.angle(alpha))
        tail = poisson.sf(n_max, energy)
        if tail > TAIL_TOL:
            raise ValueError(f"n_max={n_max} leaves truncation tail {tail:.2e} > {TAIL_TOL}")
    vec = FockVector(c, int(n_max))
    if abs(vec.norm - 1.0) > NORM_TOL:
        raise ValueError(f"truncated vector norm {vec.norm!r} out of tolerance")
    return vec


def _stack(vectors):
    n_max = max(v.n_max for v in vectors)
    return np.column_stack([v.padded(n_max) for v in vectors])


def density_matrix(mix):
    """Mixture ``sum_i p_i |v_i><v_i|`` from ``[(p_i, FockVector), ...]``."""
    priors = np.array([p for p, _ in mix], dtype=float)
    if abs(priors.sum() - 1.0) > 1e-12:
        raise ValueError("mixture weights must sum to 1")
    vs = _stack([v for _, v in mix])
    rho = (vs * priors) @ vs.conj().T
    if abs(np.trace(rho).real - 1.0) > NORM_TOL:
        raise ValueError("density matrix trace out of tolerance")
    return rho


def mixture_spectrum(mix):
    """Eigenvalues of the mixture density matrix (descending, clamped)."""
    rho = density_matrix(mix)
    w = np.linalg.eigvalsh(rho)[::-1]
    if w.min() < -1e-10:
        raise ValueError("mixture density matrix is not PSD")
    return np.clip(w, 0.0, None)


def helstrom_binary_oracle(s0, s1, xi0, xi1):
    """Minimum error for two pure states via the eigenvalues of xi1 rho1 - xi0 rho0."""
    if abs(xi0 + xi1 - 1.0) > 1e-12:
        raise ValueError("priors must sum to 1")
    vs = _stack([s0, s1])
    a, b = vs[:, 0], vs[:, 1]
    gamma = xi1 * np.outer(b, b.conj()) - xi0 * np.outer(a, a.conj())
    w = np.linalg.eigvalsh(gamma)
    pe = 0.5 * (1.0 - np.abs(w).sum())
    return float(min(max(pe, 0.0), min(xi0, xi1)))


def von_neumann_entropy_oracle(mix):
    """Entropy (nats) of the mixture density matrix."""
    w = mixture_spectrum(mix)
    w = w[w > 0]
    return float(-(w * np.log(w)).sum())


def two_mode_state(terms, n_max=None):
    """Coefficient matrix ``c[n_A, n_B]`` of ``sum_k coef_k |a_k>|b_k>``."""
    if n_max is None:
        n_max = max(auto_nmax(max(abs(a) ** 2, abs(b) ** 2)) for _, a, b in terms)
    psi = np.zeros((n_max + 1, n_max + 1), dtype=complex)
    for coef, a, b in terms:
        psi += coef * np.outer(coherent_fock(a, n_max).coefficients, coherent_fock(b, n_max).coefficients)
    return psi


def two_mode_overlap(x, y):
    """<x|y> for two-mode states.

    Each argument is either a pair ``(FockVector, FockVector)`` (a product
    state) or a coefficient matrix from :func:`two_mode_state`.
    """
    def as_matrix(s, n_max):
        if isinstance(s, tuple):
            a, b = s
            return np.outer(a.padded(n_max), b.padded(n_max))
        s = np.asarray(s)
        if s.shape[0] - 1 != n_max:
            raise ValueError("two-mode truncations do not match")
        return s

    def dim(s):
        if isinstance(s, tuple):
            return max(s[0].n_max, s[1].n_max)
        return np.asarray(s).shape[0] - 1

    n_max = max(dim(x), dim(y))
    return complex(np.vdot(as_matrix(x, n_max), as_matrix(y, n_max)))


def srm_channel_oracle(amplitudes, n_max=None):
    """SRM outcome probabilities P[i, j] built in the number basis.

    The Gram operator ``sum_m |a_m><a_m|`` is formed explicitly and its
    pseudo-inverse square root applied to each state.
    """
    amplitudes = np.asarray(amplitudes, dtype=complex)
    if n_max is None:
        n_max = auto_nmax(float(np.max(np.abs(amplitudes) ** 2)))
    psi = np.column_stack([coherent_fock(a, n_max).coefficients for a in amplitudes])
    w, v = np.linalg.eigh(psi @ psi.conj().T)
    keep = w > 1e-13 * w.max()
    inv_sqrt = (v[:, keep] / np.sqrt(w[keep])) @ v[:, keep].conj().T
    mu = inv_sqrt @ psi
    amp = mu.conj().T @ psi  # amp[j, i] = <mu_j|psi_i>
    return (np.abs(amp) ** 2).T

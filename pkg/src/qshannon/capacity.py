"""Mutual information, Holevo information and Gaussian-channel capacities.

Everything is computed in nats; ``CapacityReport.value_bits`` converts.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.special import xlogy

from .detection import signal_frame, srm_channel
from .states import gram, gram_eigenvalues

LN2 = np.log(2.0)
KINDS = ("mutual_info", "holevo_info", "gaussian_holevo", "gaussian_shannon")


@dataclass(frozen=True)
class CapacityReport:
    value_nats: float
    kind: str

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown capacity kind {self.kind!r}")
        if self.value_nats < -1e-12:
            raise ValueError("information must be non-negative")
        object.__setattr__(self, "value_nats", max(float(self.value_nats), 0.0))

    @property
    def value_bits(self):
        return self.value_nats / LN2


def entropy_nats(p):
    p = np.asarray(p, dtype=float)
    return float(-xlogy(p, p).sum())


def mutual_information(ch):
    """Shannon mutual information of a classical channel, in nats."""
    xi = ch.input_priors
    p = ch.p
    out = xi @ p
    ratio = np.divide(p, out[None, :], out=np.ones_like(p), where=out[None, :] > 0)
    val = float(np.sum(xi[:, None] * xlogy(p, ratio)))
    return CapacityReport(max(val, 0.0), "mutual_info")


def holevo_information(c):
    """S(rho_T) for pure states = entropy of the modified Gram spectrum."""
    lam = gram_eigenvalues(gram(c, "modified"))
    return CapacityReport(entropy_nats(lam), "holevo_info")


def srm_mutual_information(c):
    """SRM-induced mutual information: a certified lower bound on C_1."""
    return mutual_information(srm_channel(c))


def holevo_condition_residual(c, povm):
    """Largest ``||Pi_j (F_j - F_i) Pi_i||`` of the accessible-information condition.

    ``F_j = sum_i xi_i rho_i ln[P(j|i) / sum_l xi_l P(j|l)]``. A small value is
    necessary, not sufficient, for the POVM to maximise mutual information.
    Terms with ``P(j|i) = 0`` are dropped (they vanish under the Pi_j sandwich).
    """
    b = signal_frame(c)
    xi = c.priors
    amp = povm.vectors.conj().T @ b  # amp[j, i] = <mu_j|psi_i>
    p = (np.abs(amp) ** 2).T
    out = xi @ p
    if np.any(out <= 0):
        raise ValueError("a POVM outcome has zero probability: log of a zero column")
    logs = np.zeros_like(p)
    nz = p > 0
    logs[nz] = np.log(p[nz] / np.broadcast_to(out, p.shape)[nz])
    rho = np.einsum("im,jm->mij", b, b.conj())
    weighted = xi[:, None, None] * rho
    K = povm.n_outcomes
    F = np.einsum("ij,iab->jab", logs, weighted)
    pis = povm.elements()
    worst = 0.0
    for j in range(K):
        for i in range(K):
            r = pis[j] @ (F[j] - F[i]) @ pis[i]
            worst = max(worst, float(np.linalg.norm(r, 2)))
    return worst


def g_entropy(x):
    """Thermal-state entropy ``(x+1) ln(x+1) - x ln x`` with g(0) = 0."""
    x = np.asarray(x, dtype=float)
    return xlogy(x + 1.0, x + 1.0) - xlogy(x, x)


def _check_photons(Ns, Nth):
    if Ns < 0 or Nth < 0:
        raise ValueError("photon numbers must be non-negative")


def gaussian_capacity_holevo(Ns, Nth):
    _check_photons(Ns, Nth)
    return CapacityReport(float(g_entropy(Ns + Nth) - g_entropy(Nth)), "gaussian_holevo")


def gaussian_capacity_shannon(Ns, Nth):
    """Heterodyne capacity ``ln(1 + Ns/(1+Nth))``."""
    _check_photons(Ns, Nth)
    return CapacityReport(float(np.log1p(Ns / (1.0 + Nth))), "gaussian_shannon")


def quantum_advantage_gap(Ns, Nth):
    gap = gaussian_capacity_holevo(Ns, Nth).value_nats - gaussian_capacity_shannon(Ns, Nth).value_nats
    if gap < -1e-12:
        raise ArithmeticError(f"negative capacity gap {gap!r}")
    return float(gap)

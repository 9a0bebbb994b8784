"""Quadrature estimation bounds and signal-to-noise ratios.

Quadrature convention: ``X_c = (a + a^dag)/2``, so the vacuum variance is 1/4.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq

SQUEEZE_TOL = 1e-12


@dataclass(frozen=True)
class SqueezeParams:
    """Bogoliubov pair ``b = mu a + nu a^dag`` with ``mu^2 - nu^2 = 1``."""

    mu: float
    nu: float

    def __post_init__(self):
        if self.mu < 1.0 - SQUEEZE_TOL:
            raise ValueError("mu must be at least 1")
        if abs(self.mu**2 - self.nu**2 - 1.0) > SQUEEZE_TOL * max(1.0, self.mu**2):
            raise ValueError("squeeze parameters must satisfy mu^2 - nu^2 = 1")

    @classmethod
    def from_squeeze(cls, r):
        return cls(math.cosh(r), math.sinh(r))


@dataclass(frozen=True)
class EstimationReport:
    variance: float
    snr: float
    receiver: str
    mu_s: float | None = None
    nu_s: float | None = None

    def __post_init__(self):
        if self.variance < 0 or self.snr < 0:
            raise ValueError("variance and snr must be non-negative")


def _nonneg(name, x):
    if x < 0:
        raise ValueError(f"{name} must be non-negative")


def _transmissivity(eps):
    if not 0.0 <= eps <= 1.0:
        raise ValueError("transmissivity must lie in [0, 1]")


def crb_single_quadrature(N):
    """Single-quadrature bound ``N/2 + 1/4``."""
    _nonneg("N", N)
    return 0.5 * N + 0.25


def yuen_lax_heterodyne_var(N):
    """Simultaneous-quadrature (heterodyne) bound ``N + 1``."""
    _nonneg("N", N)
    return N + 1.0


def generalized_heterodyne_vars(p):
    """Variance pair ``(1/4 + |mu+nu|^2/4, 1/4 + |mu-nu|^2/4)``."""
    return 0.25 + 0.25 * (p.mu + p.nu) ** 2, 0.25 + 0.25 * (p.mu - p.nu) ** 2


def optimal_squeeze(Ns):
    """SNR-maximising pair ``((Ns+1), Ns) / sqrt(2 Ns + 1)``."""
    _nonneg("Ns", Ns)
    d = math.sqrt(2.0 * Ns + 1.0)
    return SqueezeParams((Ns + 1.0) / d, Ns / d)


def squeezed_snr(Ns, epsilon=1.0):
    """SNR of the optimally squeezed probe after transmissivity ``epsilon``."""
    _nonneg("Ns", Ns)
    _transmissivity(epsilon)
    sq = optimal_squeeze(Ns)
    denom = epsilon + (1.0 - epsilon) * (2.0 * Ns + 1.0)
    snr = 4.0 * epsilon * Ns * (Ns + 1.0) / denom
    var = 0.25 * epsilon / (2.0 * Ns + 1.0) + 0.25 * (1.0 - epsilon)
    return EstimationReport(var, snr, "squeezed", sq.mu, sq.nu)


def coherent_snr(Ns, epsilon=1.0):
    _nonneg("Ns", Ns)
    _transmissivity(epsilon)
    return EstimationReport(0.25, 4.0 * epsilon * Ns, "coherent")


def snr_crossover(Ns=1.0):
    """Transmissivity below which the coherent probe beats the squeezed one.

    The difference ``squeezed - coherent`` changes sign once on (0, 1);
    the root is found by bracketing.
    """
    if Ns <= 0:
        raise ValueError("Ns must be positive")

    def diff(e):
        return squeezed_snr(Ns, e).snr - coherent_snr(Ns, e).snr

    lo, hi = 1e-12, 1.0 - 1e-12
    if diff(lo) * diff(hi) > 0:
        raise ArithmeticError("no sign change of the SNR difference on (0, 1)")
    return brentq(diff, lo, hi, xtol=1e-14)


def dual_homodyne_snr(Ns):
    """Per-quadrature SNR ``Ns / (1/2)`` after a 50/50 split."""
    _nonneg("Ns", Ns)
    return Ns / 0.5


def heterodyne_snr(Ns):
    """``|alpha|^2`` over the per-quadrature heterodyne variance of a coherent state."""
    _nonneg("Ns", Ns)
    return Ns / (yuen_lax_heterodyne_var(0.0) / 2.0)


def quadrature_phase(xc, xs):
    """Phase readout ``arctan(x_s / x_c)`` resolved over the full circle."""
    return np.arctan2(xs, xc)

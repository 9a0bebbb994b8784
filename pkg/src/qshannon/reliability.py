"""Reliability functions, cutoff rates and code-length planning.

Rates and exponents are in nats per channel use.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .detection import srm_channel
from .simplex import interior_closed_form, minimize_quadratic_on_simplex, project_simplex
from .states import clamp_spectrum, constellation, gram, gram_eigenvalues, psd_sqrt

GOLDEN_TOL = 1e-10
_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0


def golden_max(f, a=0.0, b=1.0, tol=GOLDEN_TOL):
    """Maximise a unimodal ``f`` on ``[a, b]``; endpoints are always compared."""
    lo, hi = a, b
    x1 = hi - _INVPHI * (hi - lo)
    x2 = lo + _INVPHI * (hi - lo)
    f1, f2 = f(x1), f(x2)
    while hi - lo > tol:
        if f1 < f2:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + _INVPHI * (hi - lo)
            f2 = f(x2)
        else:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - _INVPHI * (hi - lo)
            f1 = f(x1)
    candidates = [(f1, x1), (f2, x2), (f(a), a), (f(b), b)]
    val, x = max(candidates)
    return x, val


def _spectrum(c):
    lam = gram_eigenvalues(gram(c, "modified"))
    return lam[lam > 0]


def _mu_from_spectrum(lam, s):
    return float(-np.log(np.sum(lam ** (1.0 + s))))


def mu_q(c, s):
    """``-ln Tr rho_xi^{1+s}`` from the modified Gram spectrum."""
    if not 0.0 <= s <= 1.0:
        raise ValueError("s must lie in [0, 1]")
    return _mu_from_spectrum(_spectrum(c), s)


def mu_q_derivative(c, s):
    """``d mu/ds = -sum lam^{1+s} ln lam / sum lam^{1+s}``."""
    lam = _spectrum(c)
    w = lam ** (1.0 + s)
    return float(-(w * np.log(lam)).sum() / w.sum())


def _optimal_prior_spectrum(c, s, tol=1e-10, max_iter=5000):
    """Spectrum of rho_xi with xi minimising ``Tr rho_xi^{1+s}`` (convex in xi).

    Projected gradient in the frame where the states are the columns of
    G^{1/2}; the gradient ``(1+s) <psi_i|rho^s|psi_i>`` stays finite on the
    simplex boundary.
    """
    b = psd_sqrt(gram(c, "plain").entries)
    xi = np.array(c.priors, dtype=float)

    def objective(x):
        rho = (b * x) @ b.conj().T
        w, v = np.linalg.eigh(rho)
        w = clamp_spectrum(w)
        return float(np.sum(w ** (1.0 + s))), w, v

    val, w, v = objective(xi)
    step = 1.0
    for _ in range(max_iter):
        proj = v.conj().T @ b
        grad = (1.0 + s) * np.real(np.sum((w ** s)[:, None] * np.abs(proj) ** 2, axis=0))
        while True:
            cand = project_simplex(xi - step * grad)
            cval, cw, cv = objective(cand)
            if cval <= val - 1e-4 * np.dot(grad, xi - cand) or step < 1e-12:
                break
            step *= 0.5
        moved = np.abs(cand - xi).max()
        xi, val, w, v = cand, cval, cw, cv
        step = min(step * 2.0, 1e3)
        if moved < tol:
            break
    return w[w > 0], xi


EXPONENT_FLOOR = 1e-13


def _floor(val):
    # the s -> 0 end carries rounding noise of order 1e-16
    val = float(val)
    return val if val > EXPONENT_FLOOR else 0.0


def reliability_quantum(c, R, optimize_priors=False):
    """``max_s [mu_Q(rho_xi, s) - s R]`` over s in [0, 1], floored at 0.

    With ``optimize_priors`` the inner maximisation over priors is solved for
    each s; otherwise the constellation's own priors are used (uniform is
    optimal for covariant sets).
    """
    if R < 0:
        raise ValueError("rate must be non-negative")
    if optimize_priors:
        def f(s):
            lam, _ = _optimal_prior_spectrum(c, s)
            return _mu_from_spectrum(lam, s) - s * R
    else:
        lam = _spectrum(c)

        def f(s):
            return _mu_from_spectrum(lam, s) - s * R

    _, val = golden_max(f)
    return _floor(val)


def reliability_quantum_argmax(c, R):
    lam = _spectrum(c)
    s, val = golden_max(lambda s: _mu_from_spectrum(lam, s) - s * R)
    return s, val


def gallager_e0(ch, s):
    """``-ln sum_j (sum_i xi_i P(j|i)^{1/(1+s)})^{1+s}``."""
    p = ch.p
    xi = ch.input_priors
    inner = xi @ np.power(p, 1.0 / (1.0 + s))
    return float(-np.log(np.sum(inner ** (1.0 + s))))


def reliability_semi(ch, R):
    """Individual-measurement exponent ``max_s [E0(s) - s R]``, floored at 0."""
    if R < 0:
        raise ValueError("rate must be non-negative")
    _, val = golden_max(lambda s: gallager_e0(ch, s) - s * R)
    return _floor(val)


@dataclass(frozen=True)
class ExponentCurve:
    rate_grid: np.ndarray
    exponent: np.ndarray
    kind: str

    def __post_init__(self):
        if self.kind not in ("quantum", "semi"):
            raise ValueError("curve kind must be 'quantum' or 'semi'")
        e = np.asarray(self.exponent, dtype=float)
        if np.any(e < 0):
            raise ValueError("exponents are floored at zero")
        object.__setattr__(self, "rate_grid", np.asarray(self.rate_grid, dtype=float))
        object.__setattr__(self, "exponent", e)


def exponent_curve(c, rates, kind="quantum", channel=None):
    rates = np.asarray(rates, dtype=float)
    if kind == "quantum":
        vals = [reliability_quantum(c, r) for r in rates]
    else:
        ch = channel if channel is not None else srm_channel(c)
        vals = [reliability_semi(ch, r) for r in rates]
    return ExponentCurve(rates, np.array(vals), kind)


@dataclass(frozen=True)
class CutoffReport:
    r_q: float
    r_semi_upper: float
    optimal_priors: np.ndarray
    r_q_uniform: float = float("nan")
    closed_form_priors: np.ndarray | None = field(default=None)

    def __post_init__(self):
        if self.r_semi_upper > self.r_q + 1e-10:
            raise ArithmeticError("semi-quantum cutoff exceeds the quantum cutoff")

    def to_dict(self):
        return {
            "r_q": self.r_q,
            "r_semi_upper": self.r_semi_upper,
            "r_q_uniform": self.r_q_uniform,
            "optimal_priors": [float(x) for x in self.optimal_priors],
            "closed_form_priors": None if self.closed_form_priors is None
            else [float(x) for x in self.closed_form_priors],
        }


def _simplex_cutoff(Q):
    sol = minimize_quadratic_on_simplex(Q)
    return -math.log(sol.value), sol.x


def cutoff_semi_upper(c):
    """``-ln min_xi xi^T G xi`` with ``G_ij = |<psi_i|psi_j>|``."""
    Q = gram(c, "modulus").entries.real
    return _simplex_cutoff(Q)[0]


def cutoff_quantum(c):
    """Quantum cutoff rate ``-ln min_xi xi^T Gamma xi``, ``Gamma_ij = |<psi_i|psi_j>|^2``.

    The minimiser comes from the simplex solver; when the unconstrained
    stationary point is strictly inside the simplex it is reported as
    ``closed_form_priors`` for comparison.
    """
    Q = gram(c, "modulus_squared").entries.real
    r_q, xi = _simplex_cutoff(Q)
    M = c.M
    r_uniform = math.log(M * M / Q.sum())
    cf = interior_closed_form(Q)
    return CutoffReport(
        r_q=r_q,
        r_semi_upper=cutoff_semi_upper(c),
        optimal_priors=xi,
        r_q_uniform=r_uniform,
        closed_form_priors=None if cf is None else cf[0],
    )


def required_code_length(exponent, target_pe):
    """Smallest n with ``2 exp(-n E) <= target_pe``.

    ``exponent`` is either E itself or a pair ``(R_Q, R)`` meaning E = R_Q - R.
    """
    if isinstance(exponent, (tuple, list)):
        r_q, rate = exponent
        exponent = r_q - rate
    if not 0.0 < target_pe < 1.0:
        raise ValueError("target error probability must lie in (0, 1)")
    if exponent <= 0:
        raise ValueError("rate not supported: the error exponent is not positive")
    return int(math.ceil(math.log(2.0 / target_pe) / exponent))


def g_half(t):
    """``(1/2t) (sqrt(t+1/2) + sqrt(t-1/2)) / (sqrt(t+1/2) - sqrt(t-1/2))``.

    Uses ``a - b = 1/(a + b)`` (since a^2 - b^2 = 1) to avoid cancellation.
    """
    a = math.sqrt(t + 0.5)
    b = math.sqrt(t - 0.5)
    return (a + b) ** 2 / (2.0 * t)


def _D(x):
    return (1.0 + math.sqrt(x * x + 1.0)) / 2.0


def gaussian_cutoff(Nsc, lam):
    """Cutoff rate of the coherent-state channel with Gaussian noise parameter ``lam``.

    ``lam >= 1/2``; lam = 1/2 is the noiseless case.
    """
    if Nsc < 0:
        raise ValueError("codeword energy must be non-negative")
    if lam < 0.5:
        raise ValueError("noise parameter must be >= 1/2")
    g = lam * g_half(lam)
    x = Nsc / g
    d = _D(x)
    return 2.0 * (Nsc / (2.0 * g) + 1.0 - d) + math.log(d)


def gaussian_cutoff_noiseless(Nsc):
    """The lam = 1/2 limit: ``2 (Nsc + 1 - D(2 Nsc)) + ln D(2 Nsc)``."""
    d = _D(2.0 * Nsc)
    return 2.0 * (Nsc + 1.0 - d) + math.log(d)


def uniform_constellation_like(c):
    return constellation(c.amplitudes)

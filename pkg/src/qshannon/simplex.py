"""Minimisation of ``x^T Q x`` over the probability simplex.

Accelerated projected gradient followed by an active-set polish: the support
found by the gradient phase fixes an equality-constrained KKT system whose
solution is exact when the support is right.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


def project_simplex(v):
    """Euclidean projection onto ``{x >= 0, sum x = 1}`` (sort-based)."""
    v = np.asarray(v, dtype=float)
    u = np.sort(v)[::-1]
    css = np.cumsum(u) - 1.0
    idx = np.arange(1, v.size + 1)
    rho = np.nonzero(u - css / idx > 0)[0][-1]
    theta = css[rho] / (rho + 1.0)
    return np.maximum(v - theta, 0.0)


@dataclass(frozen=True)
class SimplexSolution:
    x: np.ndarray
    value: float
    kkt_gap: float
    iterations: int


def _kkt_gap(Q, x):
    # optimality: (Qx)_i >= x^T Q x everywhere, with equality on the support
    g = Q @ x
    val = float(x @ g)
    below = np.maximum(val - g, 0.0).max()
    on_support = np.abs(g[x > 0] - val).max() if np.any(x > 0) else 0.0
    return float(max(below, on_support))


def _support_candidate(Q, support):
    idx = np.flatnonzero(support)
    sub = Q[np.ix_(idx, idx)]
    ones = np.ones(idx.size)
    try:
        y = np.linalg.solve(sub, ones)
    except np.linalg.LinAlgError:
        y = np.linalg.lstsq(sub, ones, rcond=None)[0]
    s = y.sum()
    if not np.isfinite(s) or s <= 0:
        return None
    x = np.zeros(Q.shape[0])
    x[idx] = y / s
    if np.any(x[idx] < 0):
        return None
    return x


def minimize_quadratic_on_simplex(Q, tol=1e-12, max_iter=200000):
    """Minimise ``x^T Q x`` for symmetric PSD ``Q`` over the simplex."""
    Q = np.asarray(Q, dtype=float)
    Q = 0.5 * (Q + Q.T)
    n = Q.shape[0]
    L = 2.0 * max(np.linalg.eigvalsh(Q).max(), 1e-300)
    x = np.full(n, 1.0 / n)
    y = x.copy()
    t = 1.0
    it = 0
    for it in range(1, max_iter + 1):
        x_new = project_simplex(y - (2.0 * Q @ y) / L)
        t_new = 0.5 * (1.0 + np.sqrt(1.0 + 4.0 * t * t))
        y = x_new + ((t - 1.0) / t_new) * (x_new - x)
        step = np.abs(x_new - x).max()
        x, t = x_new, t_new
        if step < 1e-15 or (it % 50 == 0 and _kkt_gap(Q, x) < tol):
            break

    best = x
    best_val = float(x @ Q @ x)
    polished = _support_candidate(Q, x > 1e-9)
    if polished is not None:
        pv = float(polished @ Q @ polished)
        if pv <= best_val + tol and _kkt_gap(Q, polished) <= max(_kkt_gap(Q, x), tol):
            best, best_val = polished, pv
    return SimplexSolution(best, best_val, _kkt_gap(Q, best), it)


def interior_closed_form(Q):
    """``Q^{-1} 1 / (1^T Q^{-1} 1)`` and its value, or None when not interior-feasible."""
    Q = np.asarray(Q, dtype=float)
    try:
        y = np.linalg.solve(Q, np.ones(Q.shape[0]))
    except np.linalg.LinAlgError:
        return None
    s = y.sum()
    if not np.isfinite(s) or s <= 0:
        return None
    x = y / s
    if np.any(x <= 0):
        return None
    return x, 1.0 / s

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qshannon.simplex import interior_closed_form, minimize_quadratic_on_simplex, project_simplex


def test_project_simplex():
    assert np.allclose(project_simplex([0.2, 0.3, 0.5]), [0.2, 0.3, 0.5])
    assert np.allclose(project_simplex([2.0, 0.0]), [1.0, 0.0])
    x = project_simplex([-1.0, 0.3, 5.0, 0.1])
    assert x.sum() == pytest.approx(1.0)
    assert np.all(x >= 0)


def test_identity_gives_uniform():
    sol = minimize_quadratic_on_simplex(np.eye(5))
    assert np.allclose(sol.x, 0.2, atol=1e-10)
    assert sol.value == pytest.approx(0.2, abs=1e-12)


def test_boundary_solution():
    # third coordinate is dominated and should get zero weight
    Q = np.array([[1.0, 0.1, 0.9], [0.1, 1.0, 0.9], [0.9, 0.9, 1.0]])
    sol = minimize_quadratic_on_simplex(Q)
    assert sol.kkt_gap < 1e-10
    assert interior_closed_form(Q) is None or np.all(interior_closed_form(Q)[0] > 0)


@settings(max_examples=100, deadline=None)
@given(st.integers(2, 6), st.integers(0, 10**6))
def test_solver_beats_random_points(n, seed):
    rng = np.random.default_rng(seed)
    a = rng.standard_normal((n, n))
    Q = a @ a.T + 1e-3 * np.eye(n)
    sol = minimize_quadratic_on_simplex(Q)
    pts = rng.dirichlet(np.ones(n), size=200)
    vals = np.einsum("ki,ij,kj->k", pts, Q, pts)
    assert sol.value <= vals.min() + 1e-10
    cf = interior_closed_form(Q)
    if cf is not None:
        assert np.allclose(sol.x, cf[0], atol=1e-8)
        assert sol.value == pytest.approx(cf[1], abs=1e-10)

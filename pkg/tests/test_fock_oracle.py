import numpy as np
import pytest

from qshannon.fock_oracle import (
    FockVector,
    auto_nmax,
    coherent_fock,
    density_matrix,
    helstrom_binary_oracle,
    mixture_spectrum,
    srm_channel_oracle,
    two_mode_overlap,
    two_mode_state,
    von_neumann_entropy_oracle,
)
from qshannon.states import coherent_inner


@pytest.mark.parametrize("alpha", [0.0, 0.3, 1 + 1j, -2.5, 7j])
def test_coherent_fock_normalised(alpha):
    v = coherent_fock(alpha)
    assert v.norm == pytest.approx(1.0, abs=1e-10)


@pytest.mark.parametrize("a,b", [(0.5, -0.5), (1 + 0.5j, 0.2), (2.0, 2.0 * np.exp(2j))])
def test_fock_inner_matches_closed_form(a, b):
    n = max(auto_nmax(abs(a) ** 2), auto_nmax(abs(b) ** 2))
    got = np.vdot(coherent_fock(a, n).coefficients, coherent_fock(b, n).coefficients)
    assert got == pytest.approx(coherent_inner(a, b), abs=1e-12)


def test_truncation_tail_check():
    with pytest.raises(ValueError):
        coherent_fock(3.0, n_max=5)
    with pytest.raises(ValueError):
        coherent_fock(20.0)


def test_truncation_robustness():
    a, b = 1.2, -1.2
    s0 = [coherent_fock(a, n) for n in (40, 60)]
    s1 = [coherent_fock(b, n) for n in (40, 60)]
    p = [helstrom_binary_oracle(x, y, 0.5, 0.5) for x, y in zip(s0, s1)]
    assert p[0] == pytest.approx(p[1], abs=1e-14)


def test_padding():
    v = coherent_fock(0.5, 30)
    assert v.padded(40)[:31].tolist() == v.coefficients.tolist()
    with pytest.raises(ValueError):
        v.padded(10)
    assert isinstance(v, FockVector)


def test_density_matrix_trace_and_spectrum():
    mix = [(0.3, coherent_fock(1.0)), (0.7, coherent_fock(-1.0))]
    rho = density_matrix(mix)
    assert np.trace(rho).real == pytest.approx(1.0, abs=1e-10)
    assert mixture_spectrum(mix).sum() == pytest.approx(1.0, abs=1e-10)
    with pytest.raises(ValueError):
        density_matrix([(0.5, coherent_fock(1.0))])


def test_entropy_oracle_orthogonal_limit():
    # far-apart states are nearly orthogonal: entropy of the priors
    mix = [(0.5, coherent_fock(6.0)), (0.5, coherent_fock(-6.0))]
    assert von_neumann_entropy_oracle(mix) == pytest.approx(np.log(2.0), abs=1e-10)


def test_helstrom_oracle_identical_states():
    s = coherent_fock(0.4)
    assert helstrom_binary_oracle(s, s, 0.3, 0.7) == pytest.approx(0.3, abs=1e-12)


def test_two_mode_overlap_product_vs_matrix():
    a, b = coherent_fock(0.4, 40), coherent_fock(-0.3j, 40)
    m = two_mode_state([(1.0, 0.4, -0.3j)], n_max=40)
    assert two_mode_overlap((a, b), m) == pytest.approx(1.0, abs=1e-10)


def test_srm_oracle_rows_stochastic():
    p = srm_channel_oracle(np.sqrt(0.8) * np.exp(2j * np.pi * np.arange(4) / 4))
    assert np.allclose(p.sum(axis=1), 1.0, atol=1e-10)

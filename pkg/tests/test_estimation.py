import math

import numpy as np
import pytest

from qshannon.estimation import (
    EstimationReport,
    SqueezeParams,
    coherent_snr,
    crb_single_quadrature,
    dual_homodyne_snr,
    generalized_heterodyne_vars,
    heterodyne_snr,
    optimal_squeeze,
    quadrature_phase,
    snr_crossover,
    squeezed_snr,
    yuen_lax_heterodyne_var,
)


def test_quadrature_bounds():
    assert crb_single_quadrature(0.0) == 0.25
    assert crb_single_quadrature(1.0) == 0.75
    assert crb_single_quadrature(4.0) - 0.25 == 2 * (crb_single_quadrature(2.0) - 0.25)
    assert yuen_lax_heterodyne_var(0.0) == 1.0
    assert yuen_lax_heterodyne_var(1.0) == 2.0
    with pytest.raises(ValueError):
        crb_single_quadrature(-1.0)


def test_squeeze_params():
    p = SqueezeParams.from_squeeze(0.7)
    assert p.mu**2 - p.nu**2 == pytest.approx(1.0, abs=1e-12)
    with pytest.raises(ValueError):
        SqueezeParams(1.2, 0.1)
    with pytest.raises(ValueError):
        SqueezeParams(0.5, 0.0)


def test_generalized_heterodyne():
    assert generalized_heterodyne_vars(SqueezeParams(1.0, 0.0)) == (0.5, 0.5)
    v = generalized_heterodyne_vars(SqueezeParams.from_squeeze(1.0))
    assert v[0] == pytest.approx(0.25 + 0.25 * math.e**2, rel=1e-14)
    assert v[1] == pytest.approx(0.25 + 0.25 * math.e**-2, rel=1e-14)


@pytest.mark.parametrize("r", np.linspace(-2, 2, 41))
def test_generalized_heterodyne_sum_at_least_one(r):
    s = sum(generalized_heterodyne_vars(SqueezeParams.from_squeeze(r)))
    assert s >= 1.0 - 1e-15
    if abs(r) > 1e-9:
        assert s > 1.0


def test_squeezed_snr():
    assert squeezed_snr(1.0, 1.0).snr == 8.0
    rep = squeezed_snr(0.0, 1.0)
    assert rep.snr == 0.0 and rep.variance == 0.25
    assert squeezed_snr(10.0, 0.01).snr < coherent_snr(10.0, 0.01).snr
    for Ns in (0.0, 0.5, 3.0, 20.0):
        assert squeezed_snr(Ns, 1.0).snr == 4 * Ns * (Ns + 1)


def test_squeezed_monotone():
    eps = np.linspace(0, 1, 21)
    assert np.all(np.diff([squeezed_snr(2.0, e).snr for e in eps]) > 0)
    ns = np.linspace(0, 10, 21)
    assert np.all(np.diff([squeezed_snr(n, 0.6).snr for n in ns]) > 0)


@pytest.mark.parametrize("Ns", [0.0, 0.3, 1.0, 7.0, 100.0])
def test_optimal_squeeze_hyperbolic(Ns):
    p = optimal_squeeze(Ns)
    assert p.mu**2 - p.nu**2 == pytest.approx(1.0, abs=1e-12)
    rep = squeezed_snr(Ns, 1.0)
    assert rep.mu_s == p.mu and rep.nu_s == p.nu


def test_coherent_snr():
    assert coherent_snr(1.0, 1.0).snr == 4.0
    assert coherent_snr(0.0).snr == 0.0
    assert coherent_snr(1.0).variance == 0.25
    with pytest.raises(ValueError):
        coherent_snr(1.0, 1.5)


@pytest.mark.parametrize("Ns", [0.1, 1.0, 10.0])
def test_crossover(Ns):
    # squeezed = coherent reduces to Ns + 1 = eps + (1 - eps)(2 Ns + 1), i.e. eps = 1/2
    assert snr_crossover(Ns) == pytest.approx(0.5, abs=1e-12)


def test_heterodyne_equivalence():
    for Ns in (0.5, 2.0):
        assert dual_homodyne_snr(Ns) == pytest.approx(heterodyne_snr(Ns))


def test_report_validation_and_phase():
    with pytest.raises(ValueError):
        EstimationReport(-1.0, 1.0, "x")
    assert quadrature_phase(-1.0, 0.0) == pytest.approx(math.pi)
    assert quadrature_phase(1.0, 1.0) == pytest.approx(math.pi / 4)

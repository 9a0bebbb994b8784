import math

import numpy as np
import pytest

from qshannon.detection import helstrom_binary, homodyne_bpsk_pe
from qshannon.fock_oracle import two_mode_overlap, two_mode_state
from qshannon.reading import (
    ReadingScenario,
    entanglement_of_formation,
    phase_shift_terms,
    reading_error,
    reading_overlap,
    reading_row,
)
from qshannon.states import psk_constellation, quasi_bell_terms


@pytest.mark.parametrize("a2", [0.01, 0.1, 1.0, 10.0])
def test_overlap_vanishes_at_pi(a2):
    assert reading_overlap(math.sqrt(a2), math.pi) < 1e-12


def test_overlap_identity():
    assert reading_overlap(0.7, 0.0) == pytest.approx(1.0, abs=1e-14)


@pytest.mark.parametrize("a2", [0.1, 0.5, 2.0])
@pytest.mark.parametrize("theta", [math.pi / 2, 1.0, math.pi, 4.0])
def test_overlap_matches_fock(a2, theta):
    t = quasi_bell_terms(2, math.sqrt(a2))
    ref = abs(two_mode_overlap(two_mode_state(t), two_mode_state(phase_shift_terms(t, theta))))
    assert reading_overlap(math.sqrt(a2), theta) == pytest.approx(ref, abs=1e-10)


def test_overlap_positive_off_pi():
    for theta in (0.5, 2.0, 3.0, 3.3, 5.0):
        assert reading_overlap(0.7, theta) > 0


def test_overlap_rejects_zero():
    with pytest.raises(ValueError):
        reading_overlap(0.0, math.pi)


def test_phase_shift_mode_a():
    t = [(1.0, 1.0, 1.0)]
    assert phase_shift_terms(t, math.pi, "A")[0][1] == pytest.approx(-1.0)
    with pytest.raises(ValueError):
        phase_shift_terms(t, 1.0, "C")


def test_entanglement_of_formation():
    for k in (0.0, 0.3, 0.99):
        assert entanglement_of_formation(2, k) == 1.0
        assert entanglement_of_formation(4, k) == 1.0
    assert entanglement_of_formation(1, 0.0) == pytest.approx(1.0)
    assert entanglement_of_formation(3, 1 - 1e-9) < 1e-6
    vals = [entanglement_of_formation(1, k) for k in np.linspace(0, 0.99, 20)]
    assert np.all(np.diff(vals) < 0)
    with pytest.raises(ValueError):
        entanglement_of_formation(1, 1.0)
    with pytest.raises(ValueError):
        entanglement_of_formation(5, 0.1)


def test_reading_errors():
    a = math.sqrt(0.5)
    assert reading_error(ReadingScenario(a, math.pi, "quasi_bell", "quantum")) == 0.0
    assert reading_error(ReadingScenario(a, math.pi, "quasi_bell", "quantum", (0.2, 0.8))) == 0.0
    q1 = reading_error(ReadingScenario(a, math.pi, "coherent", "quantum"))
    assert q1 == pytest.approx(helstrom_binary(psk_constellation(2, 0.5)), abs=1e-15)
    assert q1 == pytest.approx(0.035063252483903, abs=1e-14)
    c = reading_error(ReadingScenario(a, math.pi, "coherent", "homodyne"))
    assert c == pytest.approx(homodyne_bpsk_pe(0.5), abs=1e-15)


def test_reading_error_requires_pi():
    with pytest.raises(ValueError):
        reading_error(ReadingScenario(0.5, 1.0))
    with pytest.raises(ValueError):
        ReadingScenario(0.5, 7.0)
    with pytest.raises(ValueError):
        ReadingScenario(0.5, math.pi, priors=(0.6, 0.6))
    with pytest.raises(ValueError):
        reading_error(ReadingScenario(0.5, math.pi, "quasi_bell", "homodyne"))


@pytest.mark.parametrize("a2", [0.01, 0.1, 0.5, 1.0, 3.0])
@pytest.mark.parametrize("priors", [(0.5, 0.5), (0.7, 0.3)])
def test_reading_ordering(a2, priors):
    r = reading_row(a2, priors)
    assert r["pe_q2"] == 0.0
    assert 0.0 <= r["pe_q1"] <= r["pe_homodyne"]

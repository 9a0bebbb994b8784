"""Quantum reading of a binary phase memory with coherent or quasi-Bell probes.

A memory cell either leaves the probe unchanged or applies the phase shift
``U(theta) = exp(i theta a^dag a)``, which maps ``|beta>`` to
``|beta e^{i theta}>``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import xlogy

from .detection import homodyne_binary_pe
from .states import quasi_bell, two_mode_inner

SOURCES = ("coherent", "quasi_bell")
RECEIVERS = ("homodyne", "quantum")
PHASE_TOL = 1e-12


def phase_shift_terms(terms, theta, mode="B"):
    """Apply ``U(theta)`` to one mode of a two-mode superposition."""
    rot = complex(np.exp(1j * theta))
    if mode == "B":
        return [(c, a, b * rot) for c, a, b in terms]
    if mode == "A":
        return [(c, a * rot, b) for c, a, b in terms]
    raise ValueError("mode must be 'A' or 'B'")


def reading_overlap(alpha, theta, index=2):
    """``|<Psi(0)| I_A (x) U_B(theta) |Psi(0)>|`` for a quasi-Bell state, evaluated analytically."""
    pair = quasi_bell(alpha)
    terms = pair.terms(index)
    return abs(two_mode_inner(terms, phase_shift_terms(terms, theta)))


def _binary_entropy_bits(p):
    return float(-(xlogy(p, p) + xlogy(1.0 - p, 1.0 - p)) / math.log(2.0))


def entanglement_of_formation(pair_index, kappa):
    """Entanglement (ebits) of quasi-Bell state ``pair_index`` with ``kappa = <alpha|-alpha>``."""
    if pair_index not in (1, 2, 3, 4):
        raise ValueError("pair index must be 1, 2, 3 or 4")
    if not 0.0 <= kappa < 1.0:
        raise ValueError("kappa must lie in [0, 1)")
    if pair_index in (2, 4):
        return 1.0
    c13 = 2.0 * kappa / (1.0 + kappa * kappa)
    return _binary_entropy_bits((1.0 + c13) / 2.0)


@dataclass(frozen=True)
class ReadingScenario:
    alpha: complex
    theta: float = math.pi
    source: str = "coherent"
    receiver: str = "quantum"
    priors: tuple = (0.5, 0.5)

    def __post_init__(self):
        if not 0.0 <= self.theta < 2.0 * math.pi:
            raise ValueError("theta must lie in [0, 2 pi)")
        if self.source not in SOURCES:
            raise ValueError(f"source must be one of {SOURCES}")
        if self.receiver not in RECEIVERS:
            raise ValueError(f"receiver must be one of {RECEIVERS}")
        xi = tuple(float(p) for p in self.priors)
        if len(xi) != 2 or min(xi) < 0 or abs(sum(xi) - 1.0) > 1e-12:
            raise ValueError("priors must be two probabilities summing to 1")
        object.__setattr__(self, "priors", xi)


def reading_error(s):
    """Error probability of reading one cell of a pi-shift memory."""
    if abs(s.theta - math.pi) > PHASE_TOL:
        raise ValueError("error formulas hold only for the theta = pi memory")
    xi0, xi1 = s.priors
    if s.source == "quasi_bell":
        if s.receiver != "quantum":
            raise ValueError("quasi-Bell probes are read with the quantum receiver")
        return 0.0
    if s.receiver == "homodyne":
        return homodyne_binary_pe(s.alpha, (xi0, xi1))
    x = 4.0 * xi0 * xi1 * math.exp(-4.0 * abs(complex(s.alpha)) ** 2)
    return x / (2.0 * (1.0 + math.sqrt(1.0 - x)))


def reading_row(alpha2, priors=(0.5, 0.5)):
    """Sweep record: errors of the three readers and E(Psi_1) at ``|alpha|^2``."""
    alpha = math.sqrt(alpha2)
    kappa = math.exp(-2.0 * alpha2)
    return {
        "alpha2": alpha2,
        "pe_homodyne": reading_error(ReadingScenario(alpha, math.pi, "coherent", "homodyne", priors)),
        "pe_q1": reading_error(ReadingScenario(alpha, math.pi, "coherent", "quantum", priors)),
        "pe_q2": reading_error(ReadingScenario(alpha, math.pi, "quasi_bell", "quantum", priors)),
        "eof_psi1": entanglement_of_formation(1, kappa),
    }


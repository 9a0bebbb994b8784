"""Coherent-state algebra, constellations and Gram matrices.

Amplitudes are plain Python/numpy complex numbers; the mean photon number
of ``|alpha>`` is ``abs(alpha)**2``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

PRIOR_TOL = 1e-12
EIG_FLOOR = -1e-10

GRAM_KINDS = ("plain", "modified", "modulus", "modulus_squared")


def coherent_inner(a, b):
    """Overlap <a|b> of two coherent states.

    Works elementwise on arrays (numpy broadcasting).

    >>> abs(coherent_inner(1.0, 1.0))
    1.0
    """
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    val = np.exp(-0.5 * np.abs(a) ** 2 - 0.5 * np.abs(b) ** 2 + np.conj(a) * b)
    if val.ndim == 0:
        return complex(val)
    return val


def _check_priors(priors, M):
    priors = np.asarray(priors, dtype=float)
    if priors.shape != (M,):
        raise ValueError(f"expected {M} priors, got shape {priors.shape}")
    if not np.all(np.isfinite(priors)):
        raise ValueError("priors must be finite")
    if abs(priors.sum() - 1.0) > PRIOR_TOL:
        raise ValueError(f"priors must sum to 1 (sum = {priors.sum()!r})")
    if np.any(priors <= 0):
        raise ValueError("priors must be strictly positive (admissibility)")
    return priors


@dataclass(frozen=True)
class Constellation:
    """Ordered coherent-state signal set with prior probabilities.

    ``degenerate`` is set when two amplitudes coincide; such sets are
    accepted but the Gram matrix is singular.
    """

    amplitudes: np.ndarray
    priors: np.ndarray
    degenerate: bool = field(init=False)

    def __post_init__(self):
        amps = np.atleast_1d(np.asarray(self.amplitudes, dtype=complex))
        if amps.ndim != 1 or amps.size < 2:
            raise ValueError("a constellation needs at least two amplitudes")
        if not np.all(np.isfinite(amps)):
            raise ValueError("amplitudes must be finite")
        priors = _check_priors(self.priors, amps.size)
        amps.setflags(write=False)
        priors.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)
        object.__setattr__(self, "priors", priors)
        diff = np.abs(amps[:, None] - amps[None, :])
        np.fill_diagonal(diff, np.inf)
        object.__setattr__(self, "degenerate", bool(np.any(diff < 1e-12)))

    @property
    def M(self):
        return self.amplitudes.size

    @property
    def energies(self):
        return np.abs(self.amplitudes) ** 2

    @property
    def is_uniform(self):
        return bool(np.all(np.abs(self.priors - 1.0 / self.M) <= PRIOR_TOL))

    def to_dict(self):
        return {
            "amplitudes": [[float(a.real), float(a.imag)] for a in self.amplitudes],
            "priors": [float(p) for p in self.priors],
            "degenerate": self.degenerate,
        }

    @classmethod
    def from_dict(cls, d):
        amps = [complex(re, im) for re, im in d["amplitudes"]]
        return cls(np.array(amps), np.array(d["priors"], dtype=float))


def constellation(amplitudes, priors=None):
    amps = np.asarray(amplitudes, dtype=complex)
    if priors is None:
        priors = np.full(amps.size, 1.0 / amps.size)
    return Constellation(amps, np.asarray(priors, dtype=float))


def psk_constellation(M, Ns, priors=None):
    """M-ary PSK: amplitudes ``sqrt(Ns) * exp(2j*pi*k/M)``, k = 0..M-1."""
    if int(M) != M or M < 2:
        raise ValueError("PSK needs M >= 2")
    if Ns < 0:
        raise ValueError("mean photon number must be non-negative")
    M = int(M)
    k = np.arange(M)
    amps = np.sqrt(Ns) * np.exp(2j * np.pi * k / M)
    return constellation(amps, priors)


def is_psk(c, rtol=1e-12):
    """True when ``c`` is a PSK set ``a0 * w**k`` in natural order."""
    a0 = c.amplitudes[0]
    expected = a0 * np.exp(2j * np.pi * np.arange(c.M) / c.M)
    scale = max(abs(a0), 1.0)
    return bool(np.all(np.abs(c.amplitudes - expected) <= rtol * scale))


@dataclass(frozen=True)
class GramMatrix:
    entries: np.ndarray
    kind: str

    def __post_init__(self):
        if self.kind not in GRAM_KINDS:
            raise ValueError(f"unknown Gram kind {self.kind!r}")
        e = np.asarray(self.entries, dtype=complex)
        if e.ndim != 2 or e.shape[0] != e.shape[1]:
            raise ValueError("Gram matrix must be square")
        object.__setattr__(self, "entries", e)

    def to_dict(self):
        e = self.entries
        return {"kind": self.kind, "re": e.real.tolist(), "im": e.imag.tolist()}


def gram(c, kind="plain"):
    """Pairwise overlap matrix of a constellation.

    kind:
        ``plain``            <psi_i|psi_j>
        ``modified``         sqrt(xi_i xi_j) <psi_i|psi_j>  (eigenvalues = spectrum of rho_xi)
        ``modulus``          |<psi_i|psi_j>|
        ``modulus_squared``  |<psi_i|psi_j>|^2
    """
    a = c.amplitudes
    g = coherent_inner(a[:, None], a[None, :])
    np.fill_diagonal(g, 1.0)
    if kind == "plain":
        e = g
    elif kind == "modified":
        w = np.sqrt(c.priors)
        e = w[:, None] * g * w[None, :]
    elif kind == "modulus":
        e = np.abs(g).astype(complex)
    elif kind == "modulus_squared":
        e = (np.abs(g) ** 2).astype(complex)
    else:
        raise ValueError(f"unknown Gram kind {kind!r}")
    return GramMatrix(e, kind)


def _hermitian_or_raise(m, what="matrix"):
    scale = max(1.0, float(np.max(np.abs(m))) if m.size else 1.0)
    defect = float(np.max(np.abs(m - m.conj().T))) if m.size else 0.0
    if defect > 1e-12 * scale:
        raise ValueError(f"{what} is not Hermitian (defect {defect:.3e})")


def clamp_spectrum(w, floor=EIG_FLOOR):
    """Zero out round-off negatives; anything below ``floor`` is an error."""
    w = np.asarray(w, dtype=float)
    if w.size and w.min() < floor:
        raise ValueError(f"matrix is not positive semidefinite (eigenvalue {w.min():.3e})")
    return np.where(w < 0, 0.0, w)


def gram_eigenvalues(g):
    """Real spectrum of a Gram matrix in descending order.

    Spectra of the PSD kinds are clamped at zero; the ``modulus`` kind is
    not PSD in general and is returned as is.
    """
    m = g.entries if isinstance(g, GramMatrix) else np.asarray(g, dtype=complex)
    kind = g.kind if isinstance(g, GramMatrix) else "plain"
    _hermitian_or_raise(m, "Gram matrix")
    w = np.linalg.eigvalsh(0.5 * (m + m.conj().T))[::-1]
    if kind != "modulus":
        w = clamp_spectrum(w)
    return w


def psd_sqrt(m, pinv=False, rtol=1e-13):
    """Hermitian square root (or pseudo-inverse square root) of a PSD matrix."""
    w, v = np.linalg.eigh(0.5 * (m + m.conj().T))
    w = clamp_spectrum(w)
    if pinv:
        cut = rtol * max(w.max(), 1.0)
        s = np.zeros_like(w)
        keep = w > cut
        s[keep] = 1.0 / np.sqrt(w[keep])
    else:
        s = np.sqrt(w)
    return (v * s) @ v.conj().T


def psk_first_row(M, Ns):
    """First row <alpha_0|alpha_k> of the plain Gram matrix of M-PSK."""
    k = np.arange(M)
    return np.exp(-Ns * (1.0 - np.exp(2j * np.pi * k / M)))


def psk_spectrum(M, Ns):
    """Eigenvalues of the (circulant) plain Gram matrix of M-PSK.

    Uses the DFT of the first row with w = exp(2j*pi/M); output ordered by
    Fourier index, not sorted.
    """
    lam = np.fft.fft(psk_first_row(M, Ns)).real
    return np.maximum(lam, 0.0)


def psk_3_closed_form(Ns):
    """The 3-PSK worked example: K_c, K_s and the modified-Gram eigenvalues.

    Returns ``(Kc, Ks, (lam1, lam2, lam3))``.
    """
    Kc = np.exp(-1.5 * Ns) * np.cos(np.sqrt(3.0) * Ns / 2.0)
    Ks = np.exp(-1.5 * Ns) * np.sin(np.sqrt(3.0) * Ns / 2.0)
    lam = (
        (1 + 2 * Kc) / 3,
        (1 - Kc - np.sqrt(3.0) * Ks) / 3,
        (1 - Kc + np.sqrt(3.0) * Ks) / 3,
    )
    return float(Kc), float(Ks), tuple(float(x) for x in lam)


# --- quasi-Bell pairs -------------------------------------------------------

# each term is (sign on mode A, sign on mode B, coefficient sign)
_QB_PATTERN = {
    1: ((1, 1, 1), (-1, -1, 1)),
    2: ((1, 1, 1), (-1, -1, -1)),
    3: ((1, -1, 1), (-1, 1, 1)),
    4: ((1, -1, 1), (-1, 1, -1)),
}


@dataclass(frozen=True)
class QuasiBellPair:
    """The four entangled coherent states built on ``|alpha>, |-alpha>``."""

    alpha: complex
    kappa: float
    normalizers: tuple

    @property
    def D(self):
        k = self.kappa
        return 2 * k / (1 + k * k)

    def terms(self, index):
        return quasi_bell_terms(index, self.alpha, self.kappa)

    def gram(self):
        """4x4 overlap matrix evaluated term by term."""
        g = np.empty((4, 4), dtype=complex)
        for i in range(4):
            for j in range(4):
                g[i, j] = two_mode_inner(self.terms(i + 1), self.terms(j + 1))
        return g


def quasi_bell_terms(index, alpha, kappa=None):
    """Expansion of quasi-Bell state ``index`` as ``[(coef, a_A, a_B), ...]``."""
    if index not in _QB_PATTERN:
        raise ValueError("quasi-Bell index must be 1, 2, 3 or 4")
    alpha = complex(alpha)
    if kappa is None:
        kappa = coherent_inner(alpha, -alpha).real
    h = 1.0 / np.sqrt(2 * (1 + kappa**2)) if index in (1, 3) else 1.0 / np.sqrt(2 * (1 - kappa**2))
    return [(h * s, sa * alpha, sb * alpha) for (sa, sb, s) in _QB_PATTERN[index]]


def two_mode_inner(x, y):
    """<x|y> for two-mode superpositions of coherent product states."""
    total = 0j
    for cx, ax, bx in x:
        for cy, ay, by in y:
            total += np.conj(cx) * cy * coherent_inner(ax, ay) * coherent_inner(bx, by)
    return complex(total)


def quasi_bell(alpha):
    alpha = complex(alpha)
    if not np.isfinite(alpha) or abs(alpha) == 0:
        raise ValueError("quasi-Bell states need a nonzero finite amplitude")
    kappa = coherent_inner(alpha, -alpha).real
    if kappa >= 1.0:
        raise ValueError("amplitude too small: <alpha|-alpha> rounds to 1")
    h13 = 1.0 / np.sqrt(2 * (1 + kappa**2))
    h24 = 1.0 / np.sqrt(2 * (1 - kappa**2))
    return QuasiBellPair(alpha, float(kappa), (h13, h24, h13, h24))

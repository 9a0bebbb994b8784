"""Y-00 quantum stream cipher simulation and the amplitude-level block cipher.

Each slot carries one data bit on one of M antipodal bases of a 2M-ary
phase constellation ``sqrt(Ns) exp(i pi k / M)``. The basis (and, in
``keyed_polarity`` mode, a polarity bit) comes from an LFSR keystream shared
by the legitimate parties.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np
from scipy.integrate import quad
from scipy.special import erfc, xlogy

from .capacity import entropy_nats
from .detection import ChannelMatrix, homodyne_bpsk_pe, psk_srm_row

DEFAULT_TAPS = (16, 14, 13, 11)
MAPPERS = ("direct", "keyed_polarity")
UNITARY_TOL = 1e-10
_CHUNK = 16


@dataclass(frozen=True)
class CipherParams:
    """Protocol configuration.

    ``M = 1`` is accepted as the degenerate single-basis (plain BPSK) case.
    """

    M: int
    Ns: float
    key_bits: int = 256
    lfsr_taps: tuple = DEFAULT_TAPS
    seed: int = 1
    mapper: str = "keyed_polarity"

    def __post_init__(self):
        if self.M < 1 or self.M & (self.M - 1):
            raise ValueError("M must be a power of two")
        if not self.Ns > 0:
            raise ValueError("Ns must be positive")
        taps = tuple(int(t) for t in self.lfsr_taps)
        if not taps or min(taps) < 1:
            raise ValueError("LFSR taps must be positive integers")
        object.__setattr__(self, "lfsr_taps", taps)
        if self.key_bits < self.degree:
            raise ValueError("key_bits must be at least the LFSR degree")
        if self.mapper not in MAPPERS:
            raise ValueError(f"mapper must be one of {MAPPERS}")
        if self.seed <= 0:
            raise ValueError("seed must be a positive integer (zero locks the LFSR)")

    @property
    def degree(self):
        return max(self.lfsr_taps)

    @property
    def basis_bits(self):
        return int(self.M).bit_length() - 1

    @property
    def bits_per_slot(self):
        return self.basis_bits + (1 if self.mapper == "keyed_polarity" else 0)

    def to_dict(self):
        return {
            "M": self.M, "Ns": self.Ns, "key_bits": self.key_bits,
            "lfsr_taps": list(self.lfsr_taps), "seed": self.seed, "mapper": self.mapper,
        }


def _initial_state(seed, degree):
    # fold the key into the register width
    mask = (1 << degree) - 1
    state = 0
    s = int(seed)
    while s:
        state ^= s & mask
        s >>= degree
    if state == 0:
        raise ValueError("seed folds to an all-zero LFSR state (lockup)")
    return state


def _step_bits(state, taps, degree, n):
    out = np.empty(n, dtype=np.uint8)
    for k in range(n):
        out[k] = state & 1
        fb = 0
        for t in taps:
            fb ^= (state >> (degree - t)) & 1
        state = (state >> 1) | (fb << (degree - 1))
    return out, state


@lru_cache(maxsize=16)
def _one_period(state, taps, degree):
    """Output bits over one full cycle of the register, starting at ``state``."""
    bits = []
    s = state
    limit = 1 << degree
    while True:
        bits.append(s & 1)
        fb = 0
        for t in taps:
            fb ^= (s >> (degree - t)) & 1
        s = (s >> 1) | (fb << (degree - 1))
        if s == state or len(bits) > limit:
            break
    return np.array(bits, dtype=np.uint8)


def lfsr_keystream(params, length):
    """First ``length`` output bits of the Fibonacci LFSR keyed by ``params.seed``."""
    state = _initial_state(params.seed, params.degree)
    if params.degree <= 24:
        period = _one_period(state, params.lfsr_taps, params.degree)
        return np.resize(period, length)
    return _step_bits(state, params.lfsr_taps, params.degree, length)[0]


def lfsr_period(params):
    state = _initial_state(params.seed, params.degree)
    if params.degree > 24:
        raise ValueError("period search limited to degree <= 24")
    return int(_one_period(state, params.lfsr_taps, params.degree).size)


def _bits_to_int(bits):
    k = bits.shape[1]
    if k == 0:
        return np.zeros(bits.shape[0], dtype=np.int64)
    weights = 1 << np.arange(k - 1, -1, -1, dtype=np.int64)
    return bits.astype(np.int64) @ weights


def running_key(params, n_slots):
    """Basis indices and polarity bits for ``n_slots`` slots."""
    k = params.bits_per_slot
    ks = lfsr_keystream(params, n_slots * k).reshape(n_slots, k)
    basis = _bits_to_int(ks[:, : params.basis_bits])
    if params.mapper == "keyed_polarity":
        polarity = ks[:, -1].astype(np.uint8)
    else:
        polarity = np.zeros(n_slots, dtype=np.uint8)
    return basis, polarity


@dataclass(frozen=True)
class CipherTrace:
    data_bits: np.ndarray
    running_key: np.ndarray
    transmitted_amplitudes: np.ndarray
    bob_decisions: np.ndarray | None = None
    eve_outcomes: np.ndarray | None = None
    metrics: dict = field(default_factory=dict)
    state_indices: np.ndarray | None = None

    def __post_init__(self):
        n = len(self.data_bits)
        for name in ("running_key", "transmitted_amplitudes", "bob_decisions", "eve_outcomes", "state_indices"):
            v = getattr(self, name)
            if v is not None and len(v) != n:
                raise ValueError(f"{name} length {len(v)} differs from {n} data bits")

    def summary(self):
        return {"slots": int(len(self.data_bits)), **self.metrics}


def y00_encrypt(data, params):
    """Map data bits to transmitted amplitudes ``sqrt(Ns) exp(i pi (m/M + b'))``."""
    data = np.asarray(data, dtype=np.uint8)
    if np.any(data > 1):
        raise ValueError("data must be bits")
    n = data.size
    basis, polarity = running_key(params, n)
    b = data ^ polarity
    idx = basis + params.M * b.astype(np.int64)
    amp = math.sqrt(params.Ns) * np.exp(1j * np.pi * idx / params.M)
    return CipherTrace(data, basis, amp, state_indices=idx)


def bob_error_probability(params, receiver="quantum"):
    """Bob's binary error knowing the basis: Helstrom or homodyne."""
    return bob_pe(params.Ns, receiver)


def bob_pe(Ns, receiver="quantum"):
    if Ns < 0:
        raise ValueError("Ns must be non-negative")
    if receiver == "homodyne":
        return homodyne_bpsk_pe(Ns)
    if receiver != "quantum":
        raise ValueError("receiver must be 'quantum' or 'homodyne'")
    # 1/2 [1 - sqrt(1 - x)] with x = exp(-4 Ns), written without cancellation
    x = math.exp(-4.0 * Ns)
    return x / (2.0 * (1.0 + math.sqrt(1.0 - x)))


def _heterodyne_phase_density(phi, a):
    c = a * math.cos(phi)
    s = math.sin(phi)
    return (math.exp(-a * a) + math.sqrt(math.pi) * c * math.exp(-a * a * s * s) * erfc(-c)) / (2.0 * math.pi)


def heterodyne_phase_row(K, Ns):
    """P(outcome k | true phase 0) for heterodyne phase rounded to the nearest of K phases.

    The outcome is ``alpha + n`` with complex Gaussian ``n`` of variance 1/2
    per quadrature; the phase density is integrated exactly over each bin.
    """
    a = math.sqrt(Ns)
    w = 2.0 * math.pi / K
    row = np.empty(K)
    for k in range(K):
        lo = (k - 0.5) * w
        hi = (k + 0.5) * w
        pts = [0.0] if lo < 0.0 < hi else None
        row[k] = quad(_heterodyne_phase_density, lo, hi, args=(a,), points=pts, limit=200,
                      epsabs=1e-15, epsrel=1e-12)[0]
    return row / row.sum()


def _circulant_channel(row, priors):
    K = row.size
    idx = (np.arange(K)[None, :] - np.arange(K)[:, None]) % K
    return ChannelMatrix(row[idx], priors)


def eve_row(params, attack="srm"):
    K = 2 * params.M
    if attack == "srm":
        return psk_srm_row(K, params.Ns)
    if attack == "heterodyne":
        return heterodyne_phase_row(K, params.Ns)
    raise ValueError("attack must be 'srm' or 'heterodyne'")


def eve_channel(params, attack="srm"):
    """Eve's 2M-ary channel under a uniform running key (circulant)."""
    row = eve_row(params, attack)
    K = row.size
    return _circulant_channel(row, np.full(K, 1.0 / K))


def masking_number(params):
    """Phases within one heterodyne phase deviation ``1/(2 sqrt(Ns))`` of the true one."""
    sigma = 1.0 / (2.0 * math.sqrt(params.Ns))
    return max(1, int(math.floor(2.0 * sigma / (math.pi / params.M))))


def _row_information(row):
    """Mutual information of a circulant channel with uniform input."""
    return max(math.log(row.size) - entropy_nats(row), 0.0)


def eve_data_information(params, row):
    """Eve's information (nats) about the data bit without the key.

    Averages her channel over the running key; the keyed polarity bit makes
    the data bit independent of the transmitted state.
    """
    if params.mapper == "keyed_polarity":
        return 0.0
    M = params.M
    K = 2 * M
    j = np.arange(K)
    pj = np.empty((2, K))
    for b in (0, 1):
        states = np.arange(M) + M * b
        pj[b] = row[(j[None, :] - states[:, None]) % K].mean(axis=0)
    out = pj.mean(axis=0)
    val = 0.5 * float(np.sum(xlogy(pj, pj / out[None, :])))
    return max(val, 0.0)


def binary_entropy_nats(p):
    return float(-xlogy(p, p) - xlogy(1.0 - p, 1.0 - p))


@dataclass(frozen=True)
class SecurityReport:
    """Security metrics; ``c1_eve_lower`` is the SRM-induced information (nats/slot).

    Because the SRM information lower-bounds Eve's accessible information,
    ``unicity_lower_bound`` is an upper estimate of the true lower bound.
    """

    pe_bob: float
    pe_eve: float
    c1_eve_lower: float
    masking_number: int
    unicity_lower_bound: float
    bob_capacity: float = 0.0
    eve_data_information: float = 0.0
    key_bits: int = 0

    @property
    def advantage(self):
        return bool(self.pe_bob < self.pe_eve / 10.0 and self.bob_capacity > self.eve_data_information)

    def to_dict(self):
        return {
            "pe_bob": self.pe_bob,
            "pe_eve": self.pe_eve,
            "c1_eve_lower_nats": self.c1_eve_lower,
            "masking_number": self.masking_number,
            "unicity_lower_bound": None if math.isinf(self.unicity_lower_bound) else self.unicity_lower_bound,
            "unicity_is_upper_estimate": True,
            "bob_capacity_nats": self.bob_capacity,
            "eve_data_information_nats": self.eve_data_information,
            "advantage": self.advantage,
            "masking_warning": self.masking_number <= 1,
        }


def unicity_bound(key_bits, c1):
    if c1 <= 0:
        return math.inf
    n = math.ceil(key_bits * math.log(2.0) / c1)
    # guard against rounding leaving the product a hair short
    while n * c1 < key_bits * math.log(2.0):
        n += 1
    return n


def security_report(params, receiver="quantum"):
    row = psk_srm_row(2 * params.M, params.Ns)
    c1 = _row_information(row)
    pe_bob = bob_error_probability(params, receiver)
    return SecurityReport(
        pe_bob=pe_bob,
        pe_eve=float(max(1.0 - row[0], 0.0)),
        c1_eve_lower=c1,
        masking_number=masking_number(params),
        unicity_lower_bound=unicity_bound(params.key_bits, c1),
        bob_capacity=max(math.log(2.0) - binary_entropy_nats(pe_bob), 0.0),
        eve_data_information=eve_data_information(params, row),
        key_bits=params.key_bits,
    )


def simulate(params, n_slots, data=None, noise_seed=None):
    """Full transcript: encryption, Bob's homodyne decisions, Eve's heterodyne outcomes.

    Bob measures the keyed quadrature (Gaussian, standard deviation 1/2);
    Eve heterodynes and rounds to the nearest of the 2M phases. Replays are
    bit-identical for identical arguments.
    """
    rng = np.random.default_rng(params.seed if noise_seed is None else noise_seed)
    if data is None:
        data = rng.integers(0, 2, size=n_slots, dtype=np.uint8)
    data = np.asarray(data, dtype=np.uint8)
    if data.size != n_slots:
        raise ValueError("data length must equal n_slots")
    tx = y00_encrypt(data, params)
    a = math.sqrt(params.Ns)
    _, polarity = running_key(params, n_slots)
    sent = (data ^ polarity).astype(float)
    x = a * (1.0 - 2.0 * sent) + 0.5 * rng.standard_normal(n_slots)
    bob = ((x < 0).astype(np.uint8)) ^ polarity

    beta = tx.transmitted_amplitudes + math.sqrt(0.5) * (
        rng.standard_normal(n_slots) + 1j * rng.standard_normal(n_slots)
    )
    K = 2 * params.M
    eve = np.round(np.angle(beta) / (np.pi / params.M)).astype(np.int64) % K

    ber = float(np.mean(bob != data)) if n_slots else 0.0
    ser_eve = float(np.mean(eve != tx.state_indices)) if n_slots else 0.0
    metrics = {
        "bob_ber": ber,
        "bob_pe_homodyne": homodyne_bpsk_pe(params.Ns),
        "eve_symbol_error": ser_eve,
        "seed": params.seed,
        "lfsr_taps": list(params.lfsr_taps),
    }
    return CipherTrace(data, tx.running_key, tx.transmitted_amplitudes, bob, eve, metrics, tx.state_indices)


def _chunks(keystream, count):
    ks = np.asarray(keystream, dtype=np.uint8).ravel()
    need = count * _CHUNK
    if ks.size < need:
        raise ValueError(f"keystream too short: need {need} bits, got {ks.size}")
    return _bits_to_int(ks[:need].reshape(count, _CHUNK)) / float(1 << _CHUNK)


def keystream_bits_needed(M, mode="givens"):
    pairs = M * (M - 1) // 2 if mode == "givens" else 0
    return (2 * pairs + M) * _CHUNK


def keyed_unitary(M, keystream, mode="givens"):
    """Keyed M x M unitary: Givens rotations over all pairs then diagonal phases.

    ``mode='phase'`` uses the diagonal phases only (phase randomisation).
    Every 16-bit keystream chunk sets one angle.
    """
    if mode not in ("givens", "phase"):
        raise ValueError("mode must be 'givens' or 'phase'")
    pairs = [(i, j) for i in range(M) for j in range(i + 1, M)] if mode == "givens" else []
    u = _chunks(keystream, 2 * len(pairs) + M)
    L = np.eye(M, dtype=complex)
    for k, (i, j) in enumerate(pairs):
        th = 0.5 * np.pi * u[2 * k]
        ph = 2.0 * np.pi * u[2 * k + 1]
        c, s = math.cos(th), math.sin(th)
        ri, rj = L[i].copy(), L[j].copy()
        L[i] = c * ri - s * np.exp(-1j * ph) * rj
        L[j] = s * np.exp(1j * ph) * ri + c * rj
    phases = np.exp(2j * np.pi * u[-M:])
    return phases[:, None] * L


def unitarity_defect(L):
    L = np.asarray(L, dtype=complex)
    return float(np.linalg.norm(L.conj().T @ L - np.eye(L.shape[0]), 2))


def _resolve(key_select, M, mode):
    k = np.asarray(key_select)
    if k.ndim == 2:
        if k.shape != (M, M):
            raise ValueError("transform shape does not match the amplitude vector")
        d = unitarity_defect(k)
        if d > UNITARY_TOL:
            raise ValueError(f"transform is not unitary (defect {d:.3e})")
        return k.astype(complex)
    return keyed_unitary(M, k, mode)


def block_encrypt(amplitudes, key_select, mode="givens"):
    """``alpha_out = L alpha_in``; ``key_select`` is a keystream or an explicit unitary."""
    a = np.asarray(amplitudes, dtype=complex)
    return _resolve(key_select, a.size, mode) @ a


def block_decrypt(amplitudes, key_select, mode="givens"):
    a = np.asarray(amplitudes, dtype=complex)
    return _resolve(key_select, a.size, mode).conj().T @ a

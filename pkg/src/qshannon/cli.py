"""Command-line front end: every computation as a CSV or JSON table.

Numeric options accept either a single value or an inclusive sweep
``start:stop:steps`` (linear, or geometric with ``--log``). Several swept
options produce their Cartesian product in declaration order.
"""

from __future__ import annotations

import argparse
import csv
import io
import itertools
import json
import logging
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import __version__
from . import capacity, cipher, detection, estimation, fock_oracle, reading, reliability
from .states import psk_constellation

log = logging.getLogger("qshannon")

LN2 = math.log(2.0)
ORACLE_TOL = 1e-8
ORACLE_MAX_ENERGY = 50.0


class ComputationError(Exception):
    pass


@dataclass(frozen=True)
class Sweep:
    start: float
    stop: float
    steps: int

    def values(self, geometric=False):
        if self.steps == 0:
            return []
        if self.steps == 1:
            return [self.start]
        if geometric:
            if self.start <= 0 or self.stop <= 0:
                raise ValueError("log sweeps need positive endpoints")
            return [float(v) for v in np.geomspace(self.start, self.stop, self.steps)]
        return [float(v) for v in np.linspace(self.start, self.stop, self.steps)]


def sweep_or_float(text):
    """``x`` or ``start:stop:steps``."""
    parts = str(text).split(":")
    try:
        if len(parts) == 1:
            return float(parts[0])
        if len(parts) == 3:
            steps = int(parts[2])
            if steps < 0:
                raise ValueError
            return Sweep(float(parts[0]), float(parts[1]), steps)
    except ValueError:
        pass
    raise argparse.ArgumentTypeError(f"expected a number or start:stop:steps, got {text!r}")


def positive_int(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError("expected a positive integer")
    return v


@dataclass
class RunConfig:
    subcommand: str
    params: dict
    fmt: str = "csv"
    output: str | None = None
    sweeps: dict = field(default_factory=dict)
    seed: int = 1
    units: str = "nats"
    jobs: int = 1
    log_spacing: bool = False
    oracle_check: bool = False


# per subcommand: options that may be swept, in product order
SWEEPABLE = {
    "detect": ("ns",),
    "capacity": ("ns", "nth"),
    "reliability": ("rate",),
    "estimate": ("ns", "eps"),
    "cipher": (),
    "reading": ("alpha2",),
}

_GLOBAL = ("format", "output", "units", "jobs", "log", "oracle_check", "seed", "config", "verbose")


def _add_common(p):
    g = p.add_argument_group("output")
    g.add_argument("--format", choices=("csv", "json"), default="csv")
    g.add_argument("--output", "-o", default=None, help="write here instead of stdout")
    g.add_argument("--units", choices=("nats", "bits"), default="nats")
    g.add_argument("--jobs", type=positive_int, default=1, help="evaluate sweep points concurrently")
    g.add_argument("--log", action="store_true", help="geometric sweep spacing")
    g.add_argument("--oracle-check", action="store_true", help="re-validate against the number-basis oracle")
    g.add_argument("--seed", type=int, default=None, help="falls back to $QSHANNON_SEED, then 1")
    g.add_argument("--config", default=None, help="JSON file of option defaults; flags win")
    g.add_argument("--verbose", "-v", action="store_true")


def build_parser():
    parser = argparse.ArgumentParser(prog="qshannon", description="Coherent-state quantum communication calculations")
    parser.add_argument("--version", action="version", version=f"qshannon {__version__}")
    sub = parser.add_subparsers(dest="subcommand", required=True)
    leaves = {}

    det = sub.add_parser("detect", help="detection error probabilities")
    det_sub = det.add_subparsers(dest="family", required=True)
    p = det_sub.add_parser("psk", help="uniform M-PSK")
    p.add_argument("--m", type=positive_int, required=True)
    p.add_argument("--ns", type=sweep_or_float, required=True)
    p.add_argument("--receiver", choices=("srm", "helstrom", "homodyne", "covariant"), default="srm")
    p.add_argument("--channel-out", default=None, help="write the SRM channel matrix CSV here")
    _add_common(p)
    leaves[("detect", "psk")] = p

    cap = sub.add_parser("capacity", help="capacities")
    cap_sub = cap.add_subparsers(dest="family", required=True)
    p = cap_sub.add_parser("gaussian", help="thermal-noise bosonic channel")
    p.add_argument("--ns", type=sweep_or_float, required=True)
    p.add_argument("--nth", type=sweep_or_float, default=0.0)
    _add_common(p)
    leaves[("capacity", "gaussian")] = p
    p = cap_sub.add_parser("psk", help="Holevo and SRM information of M-PSK")
    p.add_argument("--m", type=positive_int, required=True)
    p.add_argument("--ns", type=sweep_or_float, required=True)
    _add_common(p)
    leaves[("capacity", "psk")] = p

    p = sub.add_parser("reliability", help="error exponents and code lengths for M-PSK")
    p.add_argument("--m", type=positive_int, required=True)
    p.add_argument("--ns", type=float, required=True)
    p.add_argument("--rate", type=sweep_or_float, required=True, help="rate in nats")
    p.add_argument("--target-pe", type=float, default=1e-9)
    _add_common(p)
    leaves[("reliability", None)] = p

    p = sub.add_parser("estimate", help="squeezed versus coherent SNR")
    p.add_argument("--ns", type=sweep_or_float, required=True)
    p.add_argument("--eps", type=sweep_or_float, default=1.0, help="transmissivity")
    _add_common(p)
    leaves[("estimate", None)] = p

    ci = sub.add_parser("cipher", help="Y-00 stream cipher")
    ci_sub = ci.add_subparsers(dest="family", required=True)
    for action in ("simulate", "report"):
        p = ci_sub.add_parser(action)
        p.add_argument("--m", type=positive_int, required=True)
        p.add_argument("--ns", type=float, required=True)
        p.add_argument("--key-bits", type=positive_int, default=256)
        p.add_argument("--mapper", choices=cipher.MAPPERS, default="keyed_polarity")
        p.add_argument("--taps", default="16,14,13,11", help="comma-separated LFSR taps")
        if action == "simulate":
            p.add_argument("--slots", type=positive_int, default=10000)
            p.add_argument("--metrics-csv", default=None, help="also write the metrics as CSV here")
        _add_common(p)
        leaves[("cipher", action)] = p

    p = sub.add_parser("reading", help="quantum reading with quasi-Bell probes")
    p.add_argument("--alpha2", type=sweep_or_float, required=True, help="probe energy |alpha|^2")
    p.add_argument("--xi0", type=float, default=0.5, help="prior of a flat cell")
    _add_common(p)
    leaves[("reading", None)] = p
    return parser, leaves


def _leaf_key(ns):
    return ns.subcommand, getattr(ns, "family", None)


def _load_config(path, parser):
    try:
        with open(path) as fh:
            cfg = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        parser.error(f"cannot read config {path!r}: {exc}")
    if not isinstance(cfg, dict):
        parser.error("config file must hold a JSON object")
    return {k.replace("-", "_"): v for k, v in cfg.items()}


def _typed_config(cfg, leaf):
    typed = {}
    for a in leaf._actions:
        if a.dest not in cfg or a.dest in ("help", "config"):
            continue
        v = cfg[a.dest]
        if a.type is not None and v is not None and not isinstance(v, bool):
            try:
                v = a.type(str(v))
            except (argparse.ArgumentTypeError, ValueError) as exc:
                leaf.error(f"config key {a.dest!r}: {exc}")
        if a.choices is not None and v not in a.choices:
            leaf.error(f"config key {a.dest!r}: {v!r} not in {list(a.choices)}")
        typed[a.dest] = v
        a.required = False
    return typed


def parse_args(argv=None):
    """Parse ``argv`` into a RunConfig; usage errors exit with status 2."""
    argv = list(sys.argv[1:] if argv is None else argv)
    parser, leaves = build_parser()
    pre = argparse.ArgumentParser(add_help=False)
    pre.add_argument("--config", default=None)
    cfg_path = pre.parse_known_args(argv)[0].config
    cfg = _load_config(cfg_path, parser) if cfg_path else {}
    if cfg:
        # config values become leaf defaults, so explicit flags still win
        for leaf in leaves.values():
            leaf.set_defaults(**_typed_config(cfg, leaf))
    ns = parser.parse_args(argv)
    leaf = leaves[_leaf_key(ns)]
    unknown = sorted(set(cfg) - {a.dest for a in leaf._actions})
    if unknown:
        leaf.error(f"unknown config keys: {', '.join(unknown)}")

    seed = ns.seed
    if seed is None:
        env = os.environ.get("QSHANNON_SEED")
        if env is not None:
            try:
                seed = int(env)
            except ValueError:
                parser.error(f"QSHANNON_SEED must be an integer, got {env!r}")
        else:
            seed = 1

    params = {}
    sweeps = {}
    for k, v in vars(ns).items():
        if k in _GLOBAL or k in ("subcommand", "family"):
            continue
        if isinstance(v, Sweep):
            if k not in SWEEPABLE[ns.subcommand]:
                leaf.error(f"--{k.replace('_', '-')} does not accept a sweep")
            sweeps[k] = v
        else:
            params[k] = v
    family = getattr(ns, "family", None)
    if family is not None:
        params["family"] = family
    if ns.log:
        for k, s in sweeps.items():
            if s.steps > 1 and (s.start <= 0 or s.stop <= 0):
                leaf.error(f"--log needs positive endpoints for --{k}")
    return RunConfig(
        subcommand=ns.subcommand,
        params=params,
        fmt=ns.format,
        output=ns.output,
        sweeps=sweeps,
        seed=seed,
        units=ns.units,
        jobs=ns.jobs,
        log_spacing=ns.log,
        oracle_check=ns.oracle_check,
    ), ns.verbose


# ---------------------------------------------------------------- evaluators
# Each returns an ordered dict of columns for one sweep point. Column kinds:
# "p" parameter, "r" result, "i" information-valued result (unit-converted).


def _oracle_fail(what, got, ref):
    diff = abs(got - ref)
    if not diff <= ORACLE_TOL:
        raise ComputationError(f"oracle check failed for {what}: {got!r} vs {ref!r} (diff {diff:.3e})")


def _eval_detect(p, cfg):
    M, Ns, rx = p["m"], p["ns"], p["receiver"]
    c = psk_constellation(M, Ns)
    if rx == "srm":
        pe = detection.symbol_error(detection.srm_channel(c))
    elif rx == "covariant":
        pe = detection.covariant_optimal_pe(c)
    elif rx == "helstrom":
        pe = detection.helstrom_binary(c)
    else:
        if M != 2:
            raise ComputationError("the homodyne receiver is defined for M = 2 only")
        pe = detection.homodyne_bpsk_pe(Ns)
    if cfg.oracle_check and Ns <= ORACLE_MAX_ENERGY and rx in ("srm", "covariant", "helstrom"):
        if rx == "helstrom" or M == 2:
            s0 = fock_oracle.coherent_fock(c.amplitudes[0])
            s1 = fock_oracle.coherent_fock(c.amplitudes[1])
            ref = fock_oracle.helstrom_binary_oracle(s0, s1, 0.5, 0.5)
        else:
            P = fock_oracle.srm_channel_oracle(c.amplitudes)
            ref = 1.0 - float(np.mean(np.diag(P)))
        _oracle_fail(f"detect M={M} Ns={Ns}", pe, ref)
    return [("M", "p", M), ("Ns", "p", Ns), ("receiver", "p", rx), ("pe", "r", pe)]


def _eval_capacity_gaussian(p, cfg):
    Ns, Nth = p["ns"], p["nth"]
    ch = capacity.gaussian_capacity_holevo(Ns, Nth).value_nats
    cs = capacity.gaussian_capacity_shannon(Ns, Nth).value_nats
    gap = capacity.quantum_advantage_gap(Ns, Nth)
    if cfg.oracle_check:
        _oracle_fail("thermal entropy", ch, _thermal_entropy(Ns + Nth) - _thermal_entropy(Nth))
    return [("Ns", "p", Ns), ("Nth", "p", Nth), ("C_holevo", "i", ch), ("C_shannon", "i", cs), ("gap", "i", gap)]


def _thermal_entropy(n):
    # direct sum over the geometric photon-number distribution
    if n == 0:
        return 0.0
    q = n / (n + 1.0)
    k = int(math.ceil(math.log(1e-18) / math.log(q))) + 1
    j = np.arange(k)
    logp = -math.log1p(n) + j * math.log(q)
    return float(-(np.exp(logp) * logp).sum())


def _eval_capacity_psk(p, cfg):
    M, Ns = p["m"], p["ns"]
    c = psk_constellation(M, Ns)
    ih = capacity.holevo_information(c).value_nats
    isrm = capacity.srm_mutual_information(c).value_nats
    if cfg.oracle_check and Ns <= ORACLE_MAX_ENERGY:
        mix = [(1.0 / M, fock_oracle.coherent_fock(a)) for a in c.amplitudes]
        _oracle_fail("Holevo information", ih, fock_oracle.von_neumann_entropy_oracle(mix))
    return [("M", "p", M), ("Ns", "p", Ns), ("I_holevo", "i", ih), ("I_srm", "i", isrm)]


class _ReliabilityCache:
    """Constellation-level quantities shared by every rate of one sweep."""

    def __init__(self, M, Ns):
        self.c = psk_constellation(M, Ns)
        self.ch = detection.srm_channel(self.c)


def _eval_reliability(p, cfg, cache):
    R, target = p["rate"], p["target_pe"]
    if R < 0:
        raise ComputationError("rates must be non-negative")
    eq = reliability.reliability_quantum(cache.c, R)
    es = reliability.reliability_semi(cache.ch, R)

    def length(e):
        return reliability.required_code_length(e, target) if e > 0 else math.inf

    return [("R", "i", R), ("E_quantum", "i", eq), ("E_semi", "i", es),
            ("n_quantum", "n", length(eq)), ("n_semi", "n", length(es))]


def _reliability_oracle(cache, M, Ns):
    if Ns > ORACLE_MAX_ENERGY:
        return
    mix = [(1.0 / M, fock_oracle.coherent_fock(a)) for a in cache.c.amplitudes]
    w = fock_oracle.mixture_spectrum(mix)
    _oracle_fail("mu_Q(s=1)", reliability.mu_q(cache.c, 1.0), -math.log(float(np.sum(w**2))))


def _eval_estimate(p, cfg):
    Ns, eps = p["ns"], p["eps"]
    sq = estimation.squeezed_snr(Ns, eps)
    co = estimation.coherent_snr(Ns, eps)
    return [("Ns", "p", Ns), ("eps", "p", eps), ("snr_squeezed", "r", sq.snr), ("snr_coherent", "r", co.snr),
            ("var_squeezed", "r", sq.variance), ("var_coherent", "r", co.variance),
            ("mu_s", "r", sq.mu_s), ("nu_s", "r", sq.nu_s)]


def _eval_reading(p, cfg):
    a2 = p["alpha2"]
    if a2 <= 0:
        raise ComputationError("alpha2 must be positive")
    row = reading.reading_row(a2, (p["xi0"], 1.0 - p["xi0"]))
    if cfg.oracle_check and a2 <= 10.0:
        from .states import quasi_bell_terms

        t = quasi_bell_terms(2, math.sqrt(a2))
        ref = abs(fock_oracle.two_mode_overlap(
            fock_oracle.two_mode_state(t),
            fock_oracle.two_mode_state(reading.phase_shift_terms(t, math.pi)),
        ))
        _oracle_fail("reading overlap", reading.reading_overlap(math.sqrt(a2), math.pi), ref)
    return [("alpha2", "p", a2), ("pe_homodyne", "r", row["pe_homodyne"]), ("pe_q1", "r", row["pe_q1"]),
            ("pe_q2", "r", row["pe_q2"]), ("eof_psi1", "r", row["eof_psi1"])]


# ---------------------------------------------------------------- formatting


def _convert(kind, value, units):
    if kind == "i" and units == "bits" and isinstance(value, float):
        return value / LN2
    return value


def _column_name(name, kind, units):
    if kind == "i" and name not in ("E_quantum", "E_semi"):
        return f"{name}_{units}"
    return name


def _fmt_csv(kind, v):
    if isinstance(v, str):
        return v
    if isinstance(v, (int, np.integer)) and not isinstance(v, bool):
        return str(int(v))
    v = float(v)
    if math.isinf(v):
        return "inf"
    if kind == "p":
        return f"{v:.12g}"
    return f"{v:#.12g}"


def _json_value(v):
    if isinstance(v, str) or isinstance(v, bool) or v is None:
        return v
    if isinstance(v, (int, np.integer)):
        return int(v)
    v = float(v)
    if math.isinf(v) or math.isnan(v):
        return str(v)
    return float(f"{v:.12g}")


def _jsonable(obj):
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return _json_value(obj)


def _inputs(cfg):
    d = dict(cfg.params)
    for k, s in cfg.sweeps.items():
        d[k] = {"start": s.start, "stop": s.stop, "steps": s.steps, "spacing": "log" if cfg.log_spacing else "linear"}
    d["units"] = cfg.units
    d["seed"] = cfg.seed
    return _jsonable(d)


def render_table(cfg, header, rows):
    if cfg.fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        for r in rows:
            w.writerow([_fmt_csv(kind, v) for _, kind, v in r])
        return buf.getvalue()
    doc = {
        "version": __version__,
        "subcommand": cfg.subcommand,
        "inputs": _inputs(cfg),
        "rows": [{name: _json_value(v) for name, (_, _, v) in zip(header, r)} for r in rows],
    }
    return json.dumps(doc, indent=2) + "\n"


def render_record(cfg, record):
    if cfg.fmt == "csv":
        flat = {k: (json.dumps(v) if isinstance(v, (list, dict)) else v) for k, v in record.items()}
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(list(flat))
        w.writerow([v if isinstance(v, str) else _fmt_csv("r", v) if isinstance(v, float) else str(v)
                    for v in flat.values()])
        return buf.getvalue()
    doc = {"version": __version__, "subcommand": cfg.subcommand, "inputs": _inputs(cfg), "result": _jsonable(record)}
    return json.dumps(doc, indent=2) + "\n"


# ---------------------------------------------------------------- running


def _points(cfg):
    names = [k for k in SWEEPABLE[cfg.subcommand] if k in cfg.sweeps]
    axes = [cfg.sweeps[k].values(cfg.log_spacing) for k in names]
    for combo in itertools.product(*axes):
        p = dict(cfg.params)
        p.update(zip(names, combo))
        yield p


def _evaluate(cfg):
    sc = cfg.subcommand
    fam = cfg.params.get("family")
    points = list(_points(cfg))
    if sc == "reliability":
        cache = _ReliabilityCache(cfg.params["m"], cfg.params["ns"])
        if cfg.oracle_check:
            _reliability_oracle(cache, cfg.params["m"], cfg.params["ns"])

        def fn(p):
            return _eval_reliability(p, cfg, cache)
    else:
        table = {
            ("detect", "psk"): _eval_detect,
            ("capacity", "gaussian"): _eval_capacity_gaussian,
            ("capacity", "psk"): _eval_capacity_psk,
            ("estimate", None): _eval_estimate,
            ("reading", None): _eval_reading,
        }
        ev = table[(sc, fam)]

        def fn(p):
            return ev(p, cfg)

    if cfg.jobs > 1 and len(points) > 1:
        with ThreadPoolExecutor(max_workers=cfg.jobs) as pool:
            rows = list(pool.map(fn, points))
    else:
        rows = [fn(p) for p in points]
    rows = [[(n, k, _convert(k, v, cfg.units)) for n, k, v in r] for r in rows]
    if rows:
        header = [_column_name(n, k, cfg.units) for n, k, _ in rows[0]]
    else:
        # header-only output for an empty sweep
        header = _header_for(sc, fam, cfg.units)
    return header, rows


_HEADERS = {
    ("detect", "psk"): [("M", "p"), ("Ns", "p"), ("receiver", "p"), ("pe", "r")],
    ("capacity", "gaussian"): [("Ns", "p"), ("Nth", "p"), ("C_holevo", "i"), ("C_shannon", "i"), ("gap", "i")],
    ("capacity", "psk"): [("M", "p"), ("Ns", "p"), ("I_holevo", "i"), ("I_srm", "i")],
    ("reliability", None): [("R", "i"), ("E_quantum", "i"), ("E_semi", "i"), ("n_quantum", "n"), ("n_semi", "n")],
    ("estimate", None): [("Ns", "p"), ("eps", "p"), ("snr_squeezed", "r"), ("snr_coherent", "r"),
                         ("var_squeezed", "r"), ("var_coherent", "r"), ("mu_s", "r"), ("nu_s", "r")],
    ("reading", None): [("alpha2", "p"), ("pe_homodyne", "r"), ("pe_q1", "r"), ("pe_q2", "r"), ("eof_psi1", "r")],
}


def _header_for(sc, fam, units):
    return [_column_name(n, k, units) for n, k in _HEADERS[(sc, fam)]]


def _cipher_params(cfg):
    p = cfg.params
    try:
        taps = tuple(int(t) for t in str(p["taps"]).split(","))
    except ValueError:
        raise ComputationError(f"bad tap list {p['taps']!r}") from None
    return cipher.CipherParams(p["m"], p["ns"], p["key_bits"], taps, cfg.seed, p["mapper"])


def _run_cipher(cfg):
    params = _cipher_params(cfg)
    fam = cfg.params["family"]
    if cfg.oracle_check and params.Ns <= ORACLE_MAX_ENERGY:
        a = math.sqrt(params.Ns)
        ref = fock_oracle.helstrom_binary_oracle(
            fock_oracle.coherent_fock(a), fock_oracle.coherent_fock(-a), 0.5, 0.5)
        _oracle_fail("Bob's Helstrom error", cipher.bob_error_probability(params), ref)
    if fam == "report":
        rep = cipher.security_report(params)
        record = rep.to_dict()
        units_keys = ("c1_eve_lower_nats", "bob_capacity_nats", "eve_data_information_nats")
        if cfg.units == "bits":
            record = {(k[:-5] + "_bits" if k in units_keys else k): (v / LN2 if k in units_keys else v)
                      for k, v in record.items()}
        record["lfsr_taps"] = list(params.lfsr_taps)
        record["seed"] = params.seed
        return render_record(cfg, record), None
    trace = cipher.simulate(params, cfg.params["slots"])
    summary = trace.summary()
    summary["mapper"] = params.mapper
    summary["first_running_key"] = [int(k) for k in trace.running_key[:16]]
    summary["first_eve_outcomes"] = [int(k) for k in trace.eve_outcomes[:16]]
    extra = None
    if cfg.params.get("metrics_csv"):
        extra = (cfg.params["metrics_csv"], render_record(RunConfig("cipher", {}, fmt="csv"), trace.metrics))
    return render_record(cfg, summary), extra


def _write(path, text):
    if path is None:
        sys.stdout.write(text)
        sys.stdout.flush()
    else:
        with open(path, "w", newline="") as fh:
            fh.write(text)


def run(cfg):
    """Evaluate and emit; returns the process exit code."""
    try:
        if cfg.subcommand == "cipher":
            text, extra = _run_cipher(cfg)
            _write(cfg.output, text)
            if extra is not None:
                _write(*extra)
            return 0
        header, rows = _evaluate(cfg)
        _write(cfg.output, render_table(cfg, header, rows))
        if cfg.subcommand == "detect" and cfg.params.get("channel_out"):
            if len(rows) != 1:
                raise ComputationError("--channel-out needs a single Ns value")
            ns = rows[0][1][2]
            ch = detection.srm_channel(psk_constellation(cfg.params["m"], ns))
            _write(cfg.params["channel_out"], ch.to_csv())
        return 0
    except (ComputationError, ValueError, ArithmeticError, OverflowError, np.linalg.LinAlgError) as exc:
        msg = str(exc).splitlines()[0] if str(exc) else type(exc).__name__
        sys.stderr.write(f"qshannon: error: {msg}\n")
        return 1


def main(argv=None):
    cfg, verbose = parse_args(argv)
    logging.basicConfig(level=logging.INFO if verbose else logging.WARNING, format="%(name)s: %(message)s")
    log.info("running %s with %s", cfg.subcommand, cfg.params)
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())

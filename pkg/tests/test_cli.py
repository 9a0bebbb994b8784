import json
import subprocess
import sys

import pytest

from qshannon import __version__, cli


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_capacity_gaussian_row(capsys):
    code, out, _ = run_cli(capsys, "capacity", "gaussian", "--ns", "1", "--nth", "0")
    assert code == 0
    assert out.splitlines() == [
        "Ns,Nth,C_holevo_nats,C_shannon_nats,gap_nats",
        "1,0,1.38629436112,0.693147180560,0.693147180560",
    ]


def test_units_bits(capsys):
    _, out, _ = run_cli(capsys, "capacity", "gaussian", "--ns", "1", "--units", "bits")
    assert out.splitlines()[1] == "1,0,2.00000000000,1.00000000000,1.00000000000"


def test_detect_sweep_golden(capsys):
    _, out, _ = run_cli(capsys, "detect", "psk", "--m", "3", "--ns", "0.5:2:4", "--receiver", "covariant")
    assert out == (
        "M,Ns,receiver,pe\n"
        "3,0.5,covariant,0.130976337961\n"
        "3,1,covariant,0.0286405810318\n"
        "3,1.5,covariant,0.00582340385484\n"
        "3,2,covariant,0.00122746293725\n"
    )


def test_parse_args_mapping():
    cfg, _ = cli.parse_args(["detect", "psk", "--m", "3", "--ns", "1.0", "--receiver", "srm"])
    assert cfg.subcommand == "detect"
    assert cfg.params["m"] == 3 and cfg.params["ns"] == 1.0 and cfg.params["receiver"] == "srm"
    cfg, _ = cli.parse_args(["reliability", "--m", "3", "--ns", "1.0", "--rate", "0:1.2:25"])
    assert cfg.sweeps["rate"] == cli.Sweep(0.0, 1.2, 25)


def test_reliability_sweep(capsys):
    code, out, _ = run_cli(capsys, "reliability", "--m", "3", "--ns", "1.0", "--rate", "0:1.2:25", "--format", "csv")
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "R_nats,E_quantum,E_semi,n_quantum,n_semi"
    assert len(lines) == 26
    last = lines[-1].split(",")
    assert last[3] == "inf" and last[4] == "inf"


def test_empty_sweep_header_only(capsys):
    code, out, _ = run_cli(capsys, "reading", "--alpha2", "0.1:1:0")
    assert code == 0
    assert out == "alpha2,pe_homodyne,pe_q1,pe_q2,eof_psi1\n"


def test_reading_q2_zero(capsys):
    _, out, _ = run_cli(capsys, "reading", "--alpha2", "0.5")
    header, row = out.splitlines()
    assert float(row.split(",")[header.split(",").index("pe_q2")]) == 0.0


def test_json_has_inputs_and_version(capsys):
    _, out, _ = run_cli(capsys, "estimate", "--ns", "1", "--eps", "0:1:3", "--format", "json")
    doc = json.loads(out)
    assert doc["version"] == __version__
    assert doc["inputs"]["eps"]["steps"] == 3
    assert [r["snr_squeezed"] for r in doc["rows"]] == [0.0, 2.0, 8.0]


def test_cipher_report_golden(capsys):
    code, out, _ = run_cli(capsys, "cipher", "report", "--m", "2048", "--ns", "1e4", "--key-bits", "256",
                           "--seed", "7", "--format", "json")
    assert code == 0
    res = json.loads(out)["result"]
    assert res == {
        "pe_bob": 0.0,
        "pe_eve": 0.877607165988,
        "c1_eve_lower_nats": 5.71723089725,
        "masking_number": 6,
        "unicity_lower_bound": 32,
        "unicity_is_upper_estimate": True,
        "bob_capacity_nats": 0.69314718056,
        "eve_data_information_nats": 0.0,
        "advantage": True,
        "masking_warning": False,
        "lfsr_taps": [16, 14, 13, 11],
        "seed": 7,
    }


def test_cipher_simulate_deterministic(capsys, tmp_path):
    argv = ["cipher", "simulate", "--m", "8", "--ns", "1", "--slots", "2000", "--seed", "3", "--format", "json"]
    extra = ["--metrics-csv", str(tmp_path / "m.csv")]
    _, a, _ = run_cli(capsys, *argv, *extra)
    _, b, _ = run_cli(capsys, *argv, *extra)
    assert a == b
    assert (tmp_path / "m.csv").read_text().startswith("bob_ber,")


def test_seed_env_fallback(capsys, monkeypatch):
    monkeypatch.setenv("QSHANNON_SEED", "42")
    _, out, _ = run_cli(capsys, "cipher", "report", "--m", "2", "--ns", "1", "--format", "json")
    assert json.loads(out)["inputs"]["seed"] == 42
    _, out, _ = run_cli(capsys, "cipher", "report", "--m", "2", "--ns", "1", "--format", "json", "--seed", "5")
    assert json.loads(out)["inputs"]["seed"] == 5


def test_config_merge_flags_win(capsys, tmp_path):
    cfg = tmp_path / "c.json"
    cfg.write_text(json.dumps({"m": 3, "ns": 0.5, "receiver": "covariant"}))
    _, out, _ = run_cli(capsys, "detect", "psk", "--config", str(cfg))
    assert out.splitlines()[1] == "3,0.5,covariant,0.130976337961"
    _, out, _ = run_cli(capsys, "detect", "psk", "--config", str(cfg), "--ns", "1")
    assert out.splitlines()[1] == "3,1,covariant,0.0286405810318"


def test_config_unknown_key(capsys, tmp_path):
    cfg = tmp_path / "c.json"
    cfg.write_text(json.dumps({"bogus": 1}))
    with pytest.raises(SystemExit) as e:
        cli.main(["reading", "--alpha2", "1", "--config", str(cfg)])
    assert e.value.code == 2


def test_jobs_preserve_order(capsys):
    argv = ["capacity", "psk", "--m", "4", "--ns", "0.1:3:12"]
    _, serial, _ = run_cli(capsys, *argv)
    _, parallel, _ = run_cli(capsys, *argv, "--jobs", "4")
    assert serial == parallel


def test_log_spacing(capsys):
    _, out, _ = run_cli(capsys, "capacity", "gaussian", "--ns", "0.01:100:5", "--log")
    assert [r.split(",")[0] for r in out.splitlines()[1:]] == ["0.01", "0.1", "1", "10", "100"]


def test_oracle_check_passes(capsys):
    for argv in (
        ["detect", "psk", "--m", "3", "--ns", "1", "--oracle-check"],
        ["detect", "psk", "--m", "2", "--ns", "0.5", "--receiver", "helstrom", "--oracle-check"],
        ["capacity", "psk", "--m", "4", "--ns", "1", "--oracle-check"],
        ["capacity", "gaussian", "--ns", "2", "--nth", "0.5", "--oracle-check"],
        ["reliability", "--m", "3", "--ns", "1", "--rate", "0.2", "--oracle-check"],
        ["reading", "--alpha2", "0.5", "--oracle-check"],
        ["cipher", "report", "--m", "4", "--ns", "1", "--oracle-check"],
    ):
        assert run_cli(capsys, *argv)[0] == 0


def test_oracle_check_failure_exits_1(capsys, monkeypatch):
    monkeypatch.setattr(cli.detection, "covariant_optimal_pe", lambda c: 0.5)
    code, _, err = run_cli(capsys, "detect", "psk", "--m", "3", "--ns", "1", "--receiver", "covariant",
                           "--oracle-check")
    assert code == 1
    assert err.startswith("qshannon: error: oracle check failed")
    assert len(err.strip().splitlines()) == 1


def test_computation_error_exit_1(capsys):
    code, out, err = run_cli(capsys, "detect", "psk", "--m", "3", "--ns", "1", "--receiver", "homodyne")
    assert code == 1 and out == ""
    assert "M = 2" in err


def test_channel_out(capsys, tmp_path):
    path = tmp_path / "ch.csv"
    run_cli(capsys, "detect", "psk", "--m", "3", "--ns", "1", "--channel-out", str(path))
    lines = path.read_text().splitlines()
    assert lines[0] == "j\\i,0,1,2"
    assert len(lines) == 4


def test_output_file(capsys, tmp_path):
    path = tmp_path / "o.csv"
    code, out, _ = run_cli(capsys, "estimate", "--ns", "1", "-o", str(path))
    assert code == 0 and out == ""
    assert path.read_text().startswith("Ns,eps,")


@pytest.mark.parametrize("argv", [
    ["detect", "psk", "--m", "3", "--ns", "x"],
    ["detect", "psk", "--m", "3", "--ns", "1", "--bogus"],
    ["reliability", "--m", "3", "--ns", "0:1:3", "--rate", "0.1"],
    ["capacity", "gaussian", "--ns", "0:1:-1"],
    ["capacity", "gaussian", "--ns", "0:1:3", "--log"],
])
def test_usage_errors_exit_2(argv):
    with pytest.raises(SystemExit) as e:
        cli.main(argv)
    assert e.value.code == 2


def test_module_entry_point_subprocess():
    r = subprocess.run([sys.executable, "-m", "qshannon", "capacity", "gaussian", "--ns", "1"],
                       capture_output=True, text=True, check=True)
    assert r.stdout.splitlines()[1] == "1,0,1.38629436112,0.693147180560,0.693147180560"
    r = subprocess.run([sys.executable, "-m", "qshannon", "detect", "psk"], capture_output=True, text=True)
    assert r.returncode == 2

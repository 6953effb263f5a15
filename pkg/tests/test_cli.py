import json
import subprocess
import sys

import pytest

from tptoeplitz.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("series, order, want", [
    ("1,4,3,1", "5", "1,4,13,41,129,406"),
    ("1", "3", "1,0,0,0"),
    ("1,1,2", "5", "1,1,-1,-3,-1,5"),
])
def test_dual(capsys, series, order, want):
    code, out, _ = run(capsys, "dual", series, "--order", order)
    assert code == 0 and out.strip() == want


def test_dual_bad_constant(capsys):
    code, _, err = run(capsys, "dual", "2,1", "--order", "3")
    assert code == 2 and "exactly 1" in err


def test_parse_error_exit(capsys):
    code, _, err = run(capsys, "dual", "1,q", "--order", "3")
    assert code == 2 and "'q'" in err


def test_tp_check_counterexample(capsys):
    code, out, _ = run(capsys, "tp-check", "1,4,13,41,129,406,1278", "--mode", "order", "--bound", "2", "--window", "5")
    assert code == 1
    assert "shape: 4,4/-" in out and "value: -5" in out and "window: 5" in out
    assert "minor: rows=0,1;cols=4,5" in out


def test_tp_check_holds(capsys):
    code, out, _ = run(capsys, "tp-check", "1,4,3,1", "--bound", "2", "--window", "3", "--pad")
    assert code == 0 and "holds-up-to-window" in out and "window: 3" in out


def test_tp_check_requires_pad(capsys):
    code, _, err = run(capsys, "tp-check", "1,4,3,1", "--bound", "2", "--window", "3")
    assert code == 2 and "truncation" in err


def test_tp_check_level(capsys):
    code, out, _ = run(capsys, "tp-check", "1,4,3,1", "--mode", "level", "--bound", "2", "--window", "4", "--pad")
    assert code == 1 and "shape: 2,2,2,2/-" in out


def test_tp_check_fast_json(capsys):
    code, out, _ = run(capsys, "tp-check", "1,1,2,0", "--mode", "tp2-fast", "--window", "2", "--json")
    data = json.loads(out)
    assert code == 1 and data["condition"] == "log-concavity" and data["window"] == 2


def test_json_report_fields(capsys):
    code, out, _ = run(capsys, "tp-check", "1,1,-1,-3,-1,5", "--bound", "1", "--window", "5", "--json")
    data = json.loads(out)
    assert code == 1
    for key in ("property", "bound", "window", "verdict", "shapes_checked", "shape", "minor", "value"):
        assert key in data
    assert data["value"] == "-1" and data["shape"] == "2/-"


@pytest.mark.parametrize("argv, want", [
    (("1,4,3,1", "2,1/-"), "11"),
    (("1,4,3,1", "3/-"), "1"),
    (("1,4,3,1", "4,4/-", "--basis", "e", "--pad"), "-5"),
    (("1,4,3,1", "2,2,2,2/-", "--pad"), "-5"),
    (("1,1/2,1/3", "2/-"), "1/3"),
])
def test_schur(capsys, argv, want):
    code, out, _ = run(capsys, "schur", *argv)
    assert code == 0 and out.strip() == want


def test_schur_truncation(capsys):
    code, _, err = run(capsys, "schur", "1,4,3", "2,1/-")
    assert code == 2


@pytest.mark.parametrize("series, shape, L", [("1,4,3,1", "2,1/-", "11"), ("1,7,2", "1/-", "7"), ("1,1,2", "2/-", "2")])
def test_duality(capsys, series, shape, L):
    code, out, _ = run(capsys, "duality", series, shape)
    assert code == 0
    assert f"L: {L}" in out and f"R: {L}" in out and "equal: true" in out


def test_theorem_b(capsys):
    code, out, _ = run(capsys, "theorem-b", "1,4,3,1", "--r", "2", "--window", "5", "--pad", "--json")
    data = json.loads(out)
    assert code == 0 and data["verdicts_agree"] and data["certificates_mirrored"]
    assert data["f_level"]["shape"] == "2,2,2,2/-" and data["g_order"]["shape"] == "4,4/-"


def test_theorem_b_identity(capsys):
    code, out, _ = run(capsys, "theorem-b", "1", "--r", "3", "--window", "3", "--pad")
    assert code == 0 and out.count("holds-up-to-window") == 2


def test_falsify(capsys):
    code, out, _ = run(capsys, "falsify", "--max-degree", "3", "--coeff-bound", "4", "--trials", "100", "--seed", "1")
    assert code == 1 and "violation found" in out


def test_falsify_none(capsys, monkeypatch):
    monkeypatch.setattr("tptoeplitz.cli.falsify_theorem_a", lambda *a, **k: None)
    code, out, _ = run(capsys, "falsify", "--max-degree", "2", "--coeff-bound", "1", "--trials", "5")
    assert code == 0 and "no violation in 5 trials" in out


def test_paper(capsys):
    code, out, _ = run(capsys, "paper")
    assert code == 0
    assert "129^2 - 41*406 = -5" in out
    assert "g_2: -1" in out
    assert "BAD" not in out


def test_deterministic_output():
    cmd = [sys.executable, "-m", "tptoeplitz", "falsify", "--max-degree", "4", "--coeff-bound", "3",
           "--trials", "50", "--seed", "9", "--json"]
    a = subprocess.run(cmd, capture_output=True, text=True)
    b = subprocess.run(cmd, capture_output=True, text=True)
    assert a.returncode == b.returncode == 1 and a.stdout == b.stdout


def test_usage_error_exit_code():
    r = subprocess.run([sys.executable, "-m", "tptoeplitz", "tp-check"], capture_output=True, text=True)
    assert r.returncode == 2

import json
import subprocess
import sys

import pytest

from opdet.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_moments(capsys):
    code, out, _ = run(capsys, "moments", "--measure", "hermite", "--upto", "4")
    assert code == 0
    assert out.strip() == '["1","0","1/2","0","3/4"]'


def test_moments_csv(capsys):
    code, out, _ = run(capsys, "moments", "--measure", "laguerre:alpha=0", "--upto", "3", "--format", "csv")
    assert code == 0
    assert out.splitlines() == ["k,moment", "0,1", "1,1", "2,2", "3,6"]


def test_det_slater(capsys):
    code, out, _ = run(capsys, "det", "slater", "--measure", "hermite", "--n", "1", "--nodes", "0,1")
    assert code == 0 and json.loads(out) == "1/4"


@pytest.mark.parametrize(
    "argv, expect",
    [
        (["det", "general", "--measure", "hermite", "--n", "1", "--nodes", "0^2,1"], "1/16"),
        (["det", "general", "--measure", "hermite", "--n", "1", "--nodes", "0,1", "--mults", "2,1"], "1/16"),
        (["det", "symmetrized", "--measure", "hermite", "--n", "1", "--nodes", "0,1,2"], "3/16"),
        (["det", "wronskian", "--measure", "hermite", "--n", "1", "--m", "3", "--x", "1"], "5/8"),
        (["det", "hankel-r", "--measure", "hermite", "--n", "1", "--nodes", "0,1,2"], "-3/2"),
        (["det", "constant", "--measure", "hermite", "--n", "2", "--m", "2", "--constant", "C"], "1/4"),
        (["det", "constant", "--measure", "hermite", "--n", "1", "--mults", "2", "--constant", "Bvec"], "-1/8"),
        (["det", "f", "--measure", "hermite", "--indices", "2,3", "--x", "0"], "3/8"),
        (["det", "p-alpha", "--measure", "hermite", "--alpha", "2,2", "--nodes", "0,1"], "1/32"),
    ],
)
def test_det_kinds(capsys, argv, expect):
    code, out, _ = run(capsys, *argv)
    assert code == 0 and json.loads(out) == expect


def test_poly(capsys):
    code, out, _ = run(capsys, "poly", "orth", "--measure", "hermite", "--n", "2")
    assert code == 0 and json.loads(out) == ["-1/4", "0", "1/2"]
    code, out, _ = run(capsys, "poly", "q", "--measure", "hermite", "--n", "1", "--nodes", "1")
    assert json.loads(out) == ["1/2", "1"]
    code, out, _ = run(capsys, "poly", "r", "--measure", "hermite", "--m", "2", "--n", "2", "--x", "1")
    assert json.loads(out) == "5/4"


def test_verify_single(capsys):
    argv = ["verify", "--id", "COR_LEC_R", "--measure", "hermite", "--n-max", "2", "--m-max", "3", "--seed", "7"]
    code, out, _ = run(capsys, *argv)
    report = json.loads(out)
    assert code == 0 and report["status"] == "pass" and report["identity"] == "COR_LEC_R"
    assert report["plan"]["seed"] == 7
    code2, out2, _ = run(capsys, *argv)
    assert out2 == out


def test_verify_unsupported_is_input_error(capsys):
    code, _, err = run(capsys, "verify", "--id", "HERMITE_MAIN", "--measure", "laguerre:alpha=0")
    assert code == 2 and "does not apply" in err


def test_scan_positivity(capsys):
    code, out, _ = run(capsys, "scan-positivity", "--measure", "hermite", "--n", "1", "--mults", "2,2", "--trials", "5")
    assert code == 0 and json.loads(out)["status"] == "pass"
    code, _, err = run(capsys, "scan-positivity", "--measure", "hermite", "--n", "1", "--mults", "3")
    assert code == 2 and "even" in err


def test_jensen_converge_csv(capsys):
    code, out, _ = run(capsys, "jensen-converge", "--measure", "laguerre:alpha=0", "--x", "1/2", "--m-max", "16", "--format", "csv")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 17
    assert lines[1].startswith("1,1/2,0.5,")


@pytest.mark.parametrize(
    "argv",
    [["bogus"], ["moments", "--measure", "hermite"], ["moments", "--measure", "hermite", "--upto", "2", "--nope"], []],
)
def test_usage_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and "usage:" in err


def test_input_errors_exit_2(capsys):
    code, _, err = run(capsys, "moments", "--measure", "legendre", "--upto", "2")
    assert code == 2 and err.startswith("opdet: error:")
    code, _, _ = run(capsys, "det", "slater", "--measure", "moments:1,0", "--n", "2", "--nodes", "0")
    assert code == 2
    code, _, err = run(capsys, "det", "wronskian", "--measure", "hermite", "--n", "1")
    assert code == 2 and "--m" in err


def test_console_script_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "opdet.cli", "det", "slater", "--measure", "hermite", "--n", "1", "--nodes", "0,1"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and proc.stdout.strip() == '"1/4"'

import json
import subprocess
import sys

import pytest

from quaddt.cli import EXIT_FAILED, EXIT_NON_ISOLATED, EXIT_OK, EXIT_USAGE, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_quadratic_table(capsys):
    code, out, _ = run(capsys, "quadratic", "--n", "6", "--ab", "7,1", "--mode", "both")
    assert code == EXIT_OK
    assert out.strip().endswith("total: -50")


def test_quadratic_json_is_stable(capsys):
    args = ["quadratic", "--n", "4", "--ab", "7,1", "--ab", "17,3", "--format", "json", "--mode", "both"]
    _, out1, _ = run(capsys, *args)
    _, out2, _ = run(capsys, *args)
    assert out1 == out2
    rec = json.loads(out1)
    assert rec["total"] == 25
    assert rec["params"] == [[7, 1], [17, 3]]
    # largest couple-A part first
    assert [len(r["pointA"]) for r in rec["fixed_points"]] == [2, 2, 2, 1, 0, 0, 0]


def test_odd_n(capsys):
    code, out, _ = run(capsys, "quadratic", "--n", "3")
    assert code == EXIT_OK and "total: 0" in out


def test_non_isolated(capsys):
    code, _, err = run(capsys, "quadratic", "--n", "8")
    assert code == EXIT_NON_ISOLATED
    assert "(x,y^2,z^2)" in err and "weight 0" in err


@pytest.mark.parametrize("argv", [
    ["quadratic", "--n", "2", "--ab", "8,1"],
    ["quadratic", "--n", "2", "--ab", "5,1"],
    ["quadratic", "--n", "-2"],
    ["classical", "--n", "1", "--lambdas", "0,1,2"],
    ["classical", "--n", "1", "--lambdas", "0,1,1,2"],
    ["conjecture", "--n-max", "8"],
    ["verify", "--only", "nonsense"],
    ["frobnicate"],
    [],
])
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == EXIT_USAGE
    assert err


def test_classical(capsys):
    code, out, _ = run(capsys, "classical", "--n", "2", "--format", "json")
    assert code == EXIT_OK
    rec = json.loads(out)
    assert rec["I_n"] == 150 and rec["match"]


def test_series(capsys):
    code, out, _ = run(capsys, "series", "--kind", "conjecture", "--order", "8")
    assert out.split() == ["1", "0", "10", "0", "25", "0", "-50", "0", "-240"]
    code, out, _ = run(capsys, "series", "--kind", "classical", "--order", "3", "--format", "json")
    assert json.loads(out)["coeffs"] == [1, 20, 150, 400]


def test_conjecture(capsys):
    code, out, _ = run(capsys, "conjecture", "--format", "json")
    assert code == EXIT_OK and json.loads(out)["all_match"]


def test_verify_only(capsys):
    code, out, _ = run(capsys, "verify", "--only", "series")
    assert code == EXIT_OK
    lines = out.strip().splitlines()
    assert len(lines) == 2 and lines[0].startswith("[PASS] 7.")


def test_verify_corrupted_signs_fails(capsys):
    code, out, _ = run(capsys, "verify", "--only", "golden", "--only", "quadratic", "--corrupt-signs")
    assert code == EXIT_FAILED
    assert out.count("[FAIL]") == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "quaddt", "series", "--kind", "macmahon", "--order", "4"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.split() == ["1", "1", "3", "6", "13"]

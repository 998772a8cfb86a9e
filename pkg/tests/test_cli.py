import subprocess
import sys

import pytest

from minorideals.cli import SUBCOMMANDS, run

SIGMA = "[1 2 3|1 2 3]*[1 2 4|2 3 4]*[2|4]"


def test_krs_example():
    code, out = run(["krs", "--m", "4", "--n", "4", "--tableau", SIGMA, "--shape", "3,2"])
    assert code == 0
    lines = out.splitlines()
    assert lines[:3] == ["1 2 1 4 2 3 2", "1 2 2 3 3 4 4", "1 1 2 0 2 1 0"]
    assert lines[3].startswith("monomial: ")


def test_krs_machine():
    code, out = run(["krs", "--tableau", "[1 2|1 3]*[1|2]", "--machine"])
    assert code == 0
    assert "monomial=x[1,1]*x[1,2]*x[2,3]" in out.splitlines()


def test_krs_inverse_round_trip():
    _, out = run(["krs", "--m", "4", "--n", "4", "--tableau", SIGMA, "--machine"])
    mono = next(line.split("=", 1)[1] for line in out.splitlines() if line.startswith("monomial="))
    code, out = run(["krs-inverse", "--monomial", mono])
    assert code == 0
    assert out.strip() == "[1 2 3 | 1 2 3]*[1 2 4 | 2 3 4]*[2 | 4]"


def test_witness():
    code, out = run(["witness", "--m", "4", "--n", "4", "--tableau", SIGMA, "--shape", "3,2"])
    assert code == 0
    assert "witness: [1 2 3 | 1 2 4]*[1 2 | 2 3]" in out
    assert "diag: x[1,1]*x[1,2]*x[2,2]*x[2,3]*x[3,4]" in out


def test_straighten():
    code, out = run(["straighten", "--tableau", "[1,2|2,3]*[1,2|1,4]"])
    assert code == 0
    assert out.splitlines() == ["-1 [1 2 | 1 2]*[1 2 | 3 4]", "+1 [1 2 | 1 3]*[1 2 | 2 4]"]


def test_grobner_check():
    code, out = run(["grobner-check", "--m", "3", "--n", "3", "--shape", "2,1", "--max-degree", "5"])
    assert code == 0
    assert out.splitlines()[-1].startswith("CHECKED ") and out.rstrip().endswith("0 FAILURES")


def test_hibi_count():
    code, out = run(["hibi", "--m", "4", "--n", "4"])
    assert code == 0
    body = [line for line in out.splitlines() if " - " in line]
    assert len(body) == 27


@pytest.mark.parametrize("argv", [
    ["standard-basis-check", "--shape", "2,1", "--max-degree", "4"],
    ["primary-check", "--shape", "2,1", "--max-degree", "4"],
    ["betti-check", "--shape", "2,1"],
    ["kernel-check", "--m", "2", "--n", "2", "--p-degree", "3"],
    ["lift-check", "--m", "3", "--n", "3"],
    ["lift-check", "--tableau", "[1 2|2 3]*[1 2|1 4]"],
    ["kpoly", "--shape", "2,1"],
    ["schur-expand", "--shape", "2,1"],
    ["hilbert-check", "--shape", "2,1", "--max-degree", "4"],
    ["kpoly", "--m", "2", "--n", "2", "--monomial", "x[1,1]", "--monomial", "x[1,2]"],
])
def test_success_exit(argv):
    code, out = run(argv)
    assert code == 0, out
    assert out


def test_verification_failure_exit():
    # x11*x12 and x21*x22 have a syzygy in degree 4, off the linear strand
    code, out = run(["betti-check", "--m", "2", "--n", "2",
                     "--monomial", "x[1,1]*x[1,2]", "--monomial", "x[2,1]*x[2,2]", "--max-degree", "4"])
    assert code == 1
    assert "FAIL" in out


@pytest.mark.parametrize("argv", [
    ["nonsense"],
    [],
    ["grobner-check", "--shape", "x"],
    ["grobner-check", "--shape", "1,2"],
    ["grobner-check", "--shape", "4"],
    ["grobner-check", "--m", "0"],
    ["krs"],
    ["krs", "--tableau", "[1,2|2,3]*[1,2|1,4]"],
    ["krs", "--tableau", "[1 2|1]"],
    ["krs-inverse", "--monomial", "y[1]"],
    ["witness", "--m", "4", "--n", "4", "--tableau", SIGMA, "--shape", "3,3"],
    ["lift-check", "--tableau", "[1 2|1 2]*[1|3]"],
    ["lift-check", "--tableau", "[2 3|1 2]*[1|3]"],
    ["kpoly", "--m", "2", "--n", "3", "--shape", "1"],
    ["kpoly", "--shape", "2,1", "--cap-gens", "2"],
    ["kernel-check", "--m", "4", "--n", "4", "--cap-enum", "10"],
])
def test_usage_errors(argv, capsys):
    code, _ = run(argv)
    assert code == 2
    err = capsys.readouterr().err
    assert "error" in err


def test_usage_error_names_flag(capsys):
    run(["grobner-check", "--max-degree", "abc"])
    assert "--max-degree" in capsys.readouterr().err


@pytest.mark.parametrize("name", sorted(SUBCOMMANDS))
def test_help_lists_flags_and_defaults(name):
    code, out = run([name, "--help"])
    assert code == 0
    for flag in ("--m", "--n", "--shape", "--max-degree", "--tableau", "--monomial",
                 "--cap-enum", "--cap-gens", "--machine"):
        assert flag in out
    assert "(default: 3)" in out


def test_deterministic_output():
    argv = ["grobner-check", "--shape", "2,1", "--max-degree", "4", "--machine"]
    assert run(argv) == run(argv)
    argv = ["hibi", "--m", "4", "--n", "4"]
    assert run(argv) == run(argv)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "minorideals", "kpoly", "--m", "1", "--n", "1",
                           "--monomial", "x[1,1]", "--machine"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert "K_quotient=1-u[1]*v[1]" in proc.stdout

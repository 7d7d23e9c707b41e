import json
import subprocess
import sys
from pathlib import Path

import pytest

from sylvester import cli
from sylvester import verify as verify_mod

HERE = Path(__file__).parent
DATA = HERE / "data"
GOLDEN = HERE / "golden"

GOLDEN_CASES = {
    "det_m3_expansion": ["det", "m3.json"],
    "det_m3_bareiss": ["det", "m3.json", "--method", "bareiss"],
    "det_m3_dodgson": ["det", "m3.json", "--method", "dodgson"],
    "det_m3_bareiss_trace": ["det", "m3.json", "--method", "bareiss", "--trace"],
    "det_empty": ["det", "empty.json"],
    "det_swap2_dodgson": ["det", "swap2.json", "--method", "dodgson"],
    "det_swap2_bareiss_trace": ["det", "swap2.json", "--method", "bareiss", "--trace"],
    "det_big": ["det", "big.json", "--method", "bareiss"],
    "minor_m3_13": ["minor", "m3.json", "--rows", "1,3", "--cols", "1,3"],
    "minor_m3_1": ["minor", "m3.json", "--rows", "1", "--cols", "1"],
    "verify_symbolic_n2": ["verify", "--symbolic", "--n", "2"],
    "verify_symbolic_n3": ["verify", "--symbolic", "--n", "3"],
    "verify_symbolic_n3_tuple": ["verify", "--symbolic", "--n", "3", "--indices", "1", "3", "1", "3",
                                 "--show-sides"],
    "verify_random_n4": ["verify", "--random", "--n", "4", "--trials", "50", "--seed", "7", "--bound", "9"],
    "verify_random_range": ["verify", "--random", "--n-min", "3", "--n-max", "6", "--trials", "100",
                            "--seed", "42", "--bound", "9"],
    "replay_n1": ["replay", "--n", "1"],
    "replay_n2": ["replay", "--n", "2"],
    "replay_n3": ["replay", "--n", "3"],
}


def run(argv, capsys):
    code = cli.main(argv)
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture(autouse=True)
def in_data_dir(monkeypatch):
    monkeypatch.chdir(DATA)


@pytest.mark.parametrize("name", sorted(GOLDEN_CASES))
def test_golden(name, capsys):
    code, out, _ = run(GOLDEN_CASES[name], capsys)
    assert code == 0
    assert out == (GOLDEN / f"{name}.out").read_text()


def test_golden_values(capsys):
    _, out, _ = run(["det", "m3.json", "--method", "bareiss"], capsys)
    assert json.loads(out)["det"] == "-3"
    _, out, _ = run(["det", "empty.json"], capsys)
    assert json.loads(out)["det"] == "1"
    _, out, _ = run(["verify", "--symbolic", "--n", "3"], capsys)
    doc = json.loads(out)
    assert doc["checks_run"] == 9 and doc["holds"]
    _, out, _ = run(["replay", "--n", "3"], capsys)
    doc = json.loads(out)
    assert len(doc["cross"]) == 6 and len(doc["mixed"]) == 3
    assert all(g["terms"] == 0 for g in [doc["corner_sq"], *doc["cross"], *doc["mixed"]])


def test_byte_deterministic(capsys):
    argv = ["verify", "--random", "--n", "5", "--trials", "5", "--seed", "99", "--bound", "50"]
    assert run(argv, capsys)[1] == run(argv, capsys)[1]


def test_timing_is_opt_in(capsys):
    code, out, _ = run(["det", "m3.json", "--timing"], capsys)
    doc = json.loads(out)
    assert code == 0 and "timing_ms" in doc and doc["det"] == "-3"


def test_stdin(capsys, monkeypatch):
    import io

    monkeypatch.setattr(sys, "stdin", io.StringIO((DATA / "m3.json").read_text()))
    code, out, _ = run(["det", "-", "--method", "dodgson"], capsys)
    assert code == 0 and json.loads(out)["det"] == "-3"


def test_dodgson_zero_interior_exit_3(capsys):
    code, out, err = run(["det", "zero_interior.json", "--method", "dodgson"], capsys)
    assert code == 3
    assert out == ""
    assert "--method bareiss" in err


def test_zero_interior_fine_with_bareiss(capsys):
    code, out, _ = run(["det", "zero_interior.json", "--method", "bareiss"], capsys)
    assert code == 0 and json.loads(out)["det"] == "52"


@pytest.mark.parametrize("argv", [
    ["det", "truncated.json"],
    ["det", "ragged.json"],
    ["det", "native_numbers.json"],
    ["det", "nonsquare.json"],
    ["det", "nonsquare.json", "--method", "bareiss"],
    ["det", "missing.json"],
    ["det", "m3.json", "--method", "gauss"],
    ["det", "m3.json", "--method", "dodgson", "--trace"],
    ["minor", "m3.json", "--rows", "1,2", "--cols", "1"],
    ["minor", "m3.json", "--rows", "4", "--cols", "1"],
    ["minor", "m3.json", "--rows", "x", "--cols", "1"],
    ["minor", "nonsquare.json", "--rows", "1", "--cols", "1"],
    ["replay", "--n", "5"],
    ["replay", "--n", "0"],
    ["replay"],
    ["verify", "--symbolic", "--n", "5"],
    ["verify", "--symbolic", "--n", "6", "--allow-large"],
    ["verify", "--symbolic", "--n", "1"],
    ["verify", "--symbolic", "--random", "--n", "3"],
    ["verify", "--n", "3"],
    ["verify", "--random", "--n", "3", "--trials", "0"],
    ["verify", "--random", "--n", "3", "--bound", "0"],
    ["verify", "--random", "--n", "3", "--seed", "-1"],
    ["verify", "--random", "--n", "3", "--n-min", "2"],
    ["verify", "--random", "--n-min", "5", "--n-max", "3"],
    ["verify", "--symbolic", "--n", "3", "--trials", "4"],
    ["verify", "--symbolic", "--n", "3", "--indices", "2", "1", "1", "2"],
    ["verify", "--symbolic", "--n-min", "2", "--n-max", "3", "--indices", "1", "2", "1", "2"],
    ["verify", "--random", "--n", "3", "--allow-large"],
    [],
    ["frobnicate"],
])
def test_usage_errors_exit_2(argv, capsys):
    code, out, err = run(argv, capsys)
    assert code == 2
    assert out == ""
    assert err


def test_symbolic_n5_with_flag(capsys):
    code, out, _ = run(["verify", "--symbolic", "--n", "5", "--allow-large",
                        "--indices", "2", "4", "1", "5"], capsys)
    assert code == 0 and json.loads(out)["holds"]


def test_violation_exit_1(capsys, monkeypatch):
    real = verify_mod.check_general

    def lying(m, *idx, **kw):
        report = real(m, *idx, **kw)
        report.residual = report.residual + 1
        return report

    monkeypatch.setattr(verify_mod, "check_general", lying)
    code, out, _ = run(["verify", "--random", "--n", "3", "--trials", "2"], capsys)
    assert code == 1
    assert json.loads(out)["violations"] == 18


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "sylvester", "det", str(DATA / "m3.json")],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert proc.stdout == (GOLDEN / "det_m3_expansion.out").read_text()
    proc = subprocess.run([sys.executable, "-m", "sylvester", "det", str(DATA / "truncated.json")],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 2 and proc.stdout == ""

import json
import subprocess
import sys

import pytest

from qcrystals.cli import main, parse_involution
from qcrystals.involutions import Perm


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_build_standard_text(capsys):
    code, out, _ = run(capsys, "build", "standard", "--n", "2", "--cat", "qplus")
    assert code == 0
    assert out.splitlines()[0] == "# 4 vertices, 5 edges"
    assert "edge 1 -0-> 1'" in out and "edge 1' -bar1-> 2'" in out


def test_build_shtab_dot_and_json(capsys):
    code, dot, _ = run(capsys, "build", "shtab", "--shape", "2,1", "--n", "3", "--format", "dot")
    assert code == 0 and dot.startswith("digraph crystal {") and dot.rstrip().endswith("}")
    code, js, _ = run(capsys, "build", "shtab", "--shape", "2,1", "--n", "2", "--format", "json")
    assert len(json.loads(js)["vertices"]) == 8


def test_build_is_deterministic(capsys):
    outs = {run(capsys, "build", "incr", "--z", "(1,3)(2,4)", "--n", "3")[1] for _ in range(2)}
    assert len(outs) == 1


def test_build_component_from_seed(capsys):
    code, out, _ = run(capsys, "build", "tensor", "--n", "2", "--m", "3", "--seed", "1'21")
    assert code == 0 and out.startswith("# 8 vertices, 12 edges")


def test_expand_and_character(capsys):
    code, out, _ = run(capsys, "expand", "--z", "(1,5)(2,3)", "--n", "5", "--check")
    assert (code, out) == (0, "(4,1): 1\n")
    code, out, _ = run(capsys, "character", "--shtab", "2,1", "--n", "2")
    assert code == 0 and "x1^2 x2^1" in out


def test_insert(capsys):
    code, out, _ = run(capsys, "insert", "--factorization", "4 | 1' 3 5 | | 4' | | 2")
    assert out == "P_EG = 1 2 4 5 / 3 5'\nQ_EG = 1 2' 2 6' / 2' 4\n"
    code, out, _ = run(capsys, "insert", "--mixed", "3'311'3", "--n", "3")
    assert out == "P_HM = 1 1 3' 3 / 3'\nQ_HM = 1 2 4' 5 / 3\n"


def test_verify_exit_code(capsys):
    code, out, _ = run(capsys, "verify", "braid", "--n", "2", "--m", "3")
    assert code == 0
    assert all(line.startswith(("PASS", "#")) for line in out.splitlines())


@pytest.mark.parametrize("argv,code", [
    (["build", "shtab", "--shape", "2,2", "--n", "3"], 2),
    (["build", "incr", "--z", "(1,2,3)", "--n", "2"], 2),
    (["build", "incr", "--z", "(1,5)(2,3)", "--n", "1"], 3),
    (["build", "words", "--n", "2"], 2),
    (["insert", "--factorization", "2 1 |"], 2),
    (["build", "words", "--n", "3", "--m", "4", "--max-vertices", "10"], 3),
])
def test_error_exit_codes(capsys, argv, code):
    assert main(argv) == code
    assert "error" in capsys.readouterr().err


def test_parse_involution_forms():
    assert parse_involution("(1,3)(2,4)") == parse_involution("3412") == Perm.from_oneline([3, 4, 1, 2])
    assert parse_involution("id") == Perm.identity()


def test_console_entry_point():
    r = subprocess.run([sys.executable, "-m", "qcrystals.cli", "build", "standard", "--n", "1"],
                       capture_output=True, text=True, check=False)
    assert r.returncode == 0 and r.stdout.startswith("# 2 vertices, 1 edges")

import json
import subprocess
import sys

import pytest

from fgalg.cli import main


def run(capsys, *argv):
    try:
        code = main(list(argv))
    except SystemExit as exc:
        code = exc.code
    out, err = capsys.readouterr()
    return code, out, err


def test_factorize(capsys):
    assert run(capsys, "factorize", "abab", "--weights", "1,1", "--r", "1")[:2] == (0, "(a, ba, b)\n")


def test_commutes(capsys):
    assert run(capsys, "commutes", "a", "b")[:2] == (0, "false\n")
    assert run(capsys, "commutes", "a+1", "a^2")[:2] == (0, "true\n")


def test_analyze_laurent(capsys):
    code, out, _ = run(capsys, "analyze", "a + a^-1", "--max-len", "3")
    assert code == 0
    assert "case: LaurentCase" in out and "root: a" in out
    code, out, _ = run(capsys, "analyze", "a + a^-1", "--max-len", "3", "--json")
    data = json.loads(out)
    assert data["case"] == "LaurentCase" and data["root"] == "a" and data["basisDim"] == 7


def test_parse_and_mul(capsys):
    assert run(capsys, "parse", "a*B + 3/2")[:2] == (0, "3/2 + ab^-1\n")
    assert run(capsys, "mul", "a+b", "a-b")[:2] == (0, "a^2 - ab + ba - b^2\n")
    code, out, _ = run(capsys, "parse", "3/2*aB", "--json")
    assert json.loads(out) == {"element": [{"word": "ab^-1", "coeff": "3/2"}], "kind": "Monomial", "isUnit": True}


def test_grading_commands(capsys):
    assert run(capsys, "leading", "ab+a", "--weights", "1,-1")[:2] == (0, "a\n")
    code, out, _ = run(capsys, "grade", "ab+ba+a", "--weights", "1,1", "--json")
    assert json.loads(out)["components"] == {"2": [{"word": "ab", "coeff": "1"}, {"word": "ba", "coeff": "1"}],
                                             "1": [{"word": "a", "coeff": "1"}]}


def test_tset_commands(capsys):
    assert run(capsys, "split", "abababab", "--weights", "1,1", "--r", "1", "--ell", "4")[:2] == (0, "(ba, ba, ba)\n")
    code, out, _ = run(capsys, "tmember", "abab", "--weights", "1,1", "--r", "1", "--json")
    assert json.loads(out)["in_T"] is True


def test_other_commands(capsys):
    assert run(capsys, "construct-h", "ab+b")[1].startswith("weights: 0,1\n")
    assert run(capsys, "primitive-root", "b^-1a^2b")[:2] == (0, "(b^-1ab)^2\n")
    assert run(capsys, "magnus", "a^-1", "--trunc", "2")[:2] == (0, "1 - x_a + x_a^2\n")
    code, out, _ = run(capsys, "centralizer", "a+b", "--max-len", "2", "--json")
    assert json.loads(out)["basisDim"] == 3
    code, out, _ = run(capsys, "subgroup", "--gens", "ab,ba", "abab", "a", "--json")
    data = json.loads(out)
    assert data["rank"] == 2 and data["basis"] == ["ab", "ba"]
    assert data["members"]["abab"] == {"member": True, "rewrite": "h1^2"}
    assert data["members"]["a"] == {"member": False, "rewrite": None}


@pytest.mark.parametrize("argv", [
    ("parse", "a^"),
    ("factorize", "ab", "--weights", "1,1", "--r", "1"),
    ("centralizer", "3", "--max-len", "2"),
    ("parse", "c", "--rank", "2"),
    ("construct-h", "ab+ba"),
])
def test_domain_errors_exit_1(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 1 and out == "" and err.startswith("error: ")


@pytest.mark.parametrize("argv", [
    ("factorize", "abab", "--weights", "1,1", "--r", "0"),
    ("factorize", "abab", "--weights", "1,1"),
    ("centralizer", "a+b", "--max-len", "0"),
    ("grade", "a", "--weights", "1,1", "--rank", "3"),
    ("bogus",),
    (),
])
def test_usage_errors_exit_2(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_parse_error_reports_offset(capsys):
    _, _, err = run(capsys, "parse", "a^")
    assert "offset 2" in err


def test_module_entry_point_is_deterministic():
    cmd = [sys.executable, "-m", "fgalg", "analyze", "ab+ba", "--max-len", "3", "--json"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second
    assert json.loads(first)["subgroupBasis"] == ["ab", "ba"]

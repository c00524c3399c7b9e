import io
import json
import subprocess
import sys

import pytest

from congrlat import cli
from congrlat.congruence import SolutionSet

EX1 = "2x + 7y - 6z ≡ -3 (mod 4)"
WORKED = ["x + y + z ≡ 0 (mod 2)", "-y + z ≡ 1 (mod 3)"]


def run(*argv):
    out = io.StringIO()
    code = cli.main(list(argv), out=out)
    return code, out.getvalue()


def test_enumerate_example_1():
    code, text = run("enumerate", EX1)
    assert code == 0
    rows = text.splitlines()
    assert len(rows) == 16
    assert rows == sorted(rows)
    assert "3 1 0" in rows


def test_count_example_2():
    assert run("count", "2x - 2y ≡ 6 (mod 4)") == (0, "8\n")


def test_count_infinite_and_none():
    assert run("count", "x + y = 3 (mod 0)") == (0, "infinite\n")
    assert run("count", "2x = 1 (mod 4)") == (0, "0\n")


def test_count_system_json():
    code, text = run("count", "--json", *WORKED)
    assert code == 0
    assert json.loads(text) == {"modulus": 6, "variables": ["x", "y", "z"], "count": 36, "solutions": None}


def test_check_single_and_system():
    code, text = run("check", "2x + 3y + 2z = 1 (mod 4)")
    assert code == 0 and text.startswith("solvable: yes")
    code, text = run("check", "x = 1 (mod 2)", "x = 2 (mod 4)")
    assert code == 0
    assert "solvable: no" in text and "crt: no" in text and "pairwise: no" in text
    code, text = run("check", "--json", *WORKED)
    assert json.loads(text) == {"solvable": True, "predicates": {"integer-system": True}}


def test_solve_renders_parametric():
    code, text = run("solve", *WORKED)
    assert code == 0
    lines = text.splitlines()
    assert lines[0].startswith("x = ") and lines[0].endswith("(mod 6)")
    assert any(line.startswith("k1 in 0..") for line in lines)


def test_solve_json():
    code, text = run("solve", "--json", "x = 3 (mod 5)")
    data = json.loads(text)
    assert code == 0
    assert data["modulus"] == 5 and data["offset"] == [3]


def test_exit_1_unsolvable(capsys):
    assert run("enumerate", "2x = 3 (mod 4)")[0] == cli.EXIT_UNSOLVABLE
    assert run("solve", "2x = 3 (mod 4)")[0] == cli.EXIT_UNSOLVABLE
    assert run("enumerate", "x = 0 (mod 2)", "x = 1 (mod 2)")[0] == cli.EXIT_UNSOLVABLE
    assert "no solutions" in capsys.readouterr().err


def test_exit_2_usage(capsys):
    assert run("enumerate", "2x + = 3 (mod 4)")[0] == cli.EXIT_USAGE
    assert "line 1, column 6" in capsys.readouterr().err
    assert run("frobnicate")[0] == cli.EXIT_USAGE
    assert run("enumerate", "x = 1 (mod 0)")[0] == cli.EXIT_USAGE
    assert run("enumerate", "--cap", "0", EX1)[0] == cli.EXIT_USAGE
    assert run("count", "-f", "/nonexistent/file")[0] == cli.EXIT_USAGE


def test_exit_3_capacity(capsys):
    assert run("enumerate", "--cap", "15", EX1)[0] == cli.EXIT_CAPACITY
    assert "16 solutions" in capsys.readouterr().err


def test_cap_from_environment(monkeypatch):
    monkeypatch.setenv(cli.CAP_ENV, "10")
    assert run("enumerate", EX1)[0] == cli.EXIT_CAPACITY
    # flag wins over env
    assert run("enumerate", "--cap", "16", EX1)[0] == cli.EXIT_OK
    monkeypatch.setenv(cli.CAP_ENV, "lots")
    assert run("enumerate", EX1)[0] == cli.EXIT_USAGE


def test_verify_input_and_random():
    code, text = run("verify", EX1)
    assert code == 0 and "0 mismatch" in text
    code, text = run("verify", "--random", "100", "--seed", "42")
    assert code == 0
    assert "checked 100 instance(s), 0 mismatch(es)" in text


def test_exit_4_mismatch(monkeypatch):
    def broken(c, cap):
        return SolutionSet(abs(c.modulus), c.arity)

    monkeypatch.setattr(cli.cg, "enumerate_solutions", broken)
    code, text = run("verify", EX1)
    assert code == cli.EXIT_MISMATCH
    assert "MISMATCH" in text


def test_file_and_stdin(tmp_path, monkeypatch):
    path = tmp_path / "sys.txt"
    path.write_text("# worked example\n" + "\n".join(WORKED) + "\n", encoding="utf-8")
    assert run("count", "-f", str(path)) == (0, "36\n")
    monkeypatch.setattr(sys, "stdin", io.StringIO(EX1 + "\n"))
    assert run("count") == (0, "16\n")


def test_json_schema_and_stability():
    code1, a = run("enumerate", "--json", *WORKED)
    code2, b = run("enumerate", "--json", *WORKED)
    assert code1 == code2 == 0
    assert a == b
    data = json.loads(a)
    assert list(data) == ["modulus", "variables", "count", "solutions"]
    assert data["count"] == len(data["solutions"]) == 36


def test_subprocess_exit_codes_and_bytes():
    cmd = [sys.executable, "-m", "congrlat", "enumerate", "--json", EX1]
    first = subprocess.run(cmd, capture_output=True)
    second = subprocess.run(cmd, capture_output=True)
    assert first.returncode == 0
    assert first.stdout == second.stdout
    bad = subprocess.run([sys.executable, "-m", "congrlat", "count", "x ="], capture_output=True)
    assert bad.returncode == 2


@pytest.mark.parametrize("flag", ["--help"])
def test_help_exits_cleanly(flag):
    with pytest.raises(SystemExit) as info:
        cli.main([flag])
    assert info.value.code == 0

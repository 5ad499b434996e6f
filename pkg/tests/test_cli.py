import json

import pytest

from uturn.algebra import parse
from uturn.cli import main, run_command
from uturn.patterns import parse_pattern, parse_tableau


def run(*argv):
    return run_command(list(argv))


def test_atom_command():
    code, out = run("atom", "--type", "C", "--rank", "2", "--shape", "2,1", "--weyl", "s2 s1")
    assert code == 0
    note, value = out.splitlines()
    assert "z^rho" in note
    assert parse(value) == parse("z1^2 + z1^2*z2^-2")


def test_character_json():
    code, out = run("character", "--shape", "1,0", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["command"] == "character"
    assert set(data) == {"command", "inputs", "result", "checks"}
    assert parse(data["result"]) == parse("z1^2 + z1*z2 + z1*z2^-1 + 1")
    assert all(c["pass"] for c in data["checks"])


def test_key_command():
    code, out = run("key", "--type", "C", "--rank", "2", "--tableau", "[[2b,1],[1]]")
    assert (code, out) == (0, "s2")
    code, out = run("key", "--type", "B", "--pattern", "[(2,1),(1,0),(1),(1/2)]")
    assert code == 0


def test_states_and_partition():
    code, out = run("states", "--shape", "2,1", "--weyl", "s1 s2 s1")
    assert code == 0 and out.startswith("# 4 states")
    code, out = run("partition", "--shape", "2,1", "--weyl", "[-1, 2]", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["result"]["states"] >= 1


def test_patterns_and_tableaux_round_trip():
    code, out = run("patterns", "--shape", "2,1", "--format", "json")
    pats = json.loads(out)["result"]
    assert len(pats) == 16
    for item in pats:
        parse_pattern(json.dumps(item["pattern"]))
    code, out = run("tableaux", "--shape", "2,1", "--keys")
    lines = out.splitlines()[1:]
    assert len(lines) == 16
    for line in lines:
        parse_tableau(line.split()[0], 2)


@pytest.mark.parametrize("target", ["ybe", "reflection", "unitarity", "nonexistence"])
def test_verify_passes(target):
    code, out = run("verify", target)
    assert code == 0, out


def test_verify_gamma_gamma():
    assert run("verify", "ybe", "--kind", "gamma-gamma")[0] == 0


def test_verify_failure_exit_code():
    # the gamma-delta relation does not hold
    assert run("verify", "ybe", "--kind", "gamma-delta", "--family", "atom")[0] == 1


def test_usage_errors(capsys):
    assert run("bogus")[0] == 2
    assert run("atom", "--shape", "x")[0] == 2
    assert run("atom", "--shape", "1,2")[0] == 2
    assert run("atom", "--shape", "1", "--weyl", "q7")[0] == 2
    assert run("key", "--tableau", "[[1,2]]")[0] == 2
    assert run("atom")[0] == 2


def test_deterministic():
    a = run("verify", "nonexistence", "--seed", "5", "--format", "json")
    b = run("verify", "nonexistence", "--seed", "5", "--format", "json")
    assert a == b


def test_output_file(tmp_path, capsys):
    path = tmp_path / "out.txt"
    assert main(["patterns", "--shape", "1,1", "--output", str(path)]) == 0
    assert capsys.readouterr().out == ""
    assert path.read_text().startswith("# 5 patterns")

import json
import subprocess
import sys

import pytest

from pathcover.cli import main
from pathcover.graph import Digraph, directed_path, to_edge_list

X_SHAPE = Digraph(5, [(0, 2), (2, 1), (3, 2), (2, 4)])


@pytest.fixture
def files(tmp_path):
    def write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)
    return write


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_gen_is_byte_stable(capsys):
    _, a, _ = run(capsys, "gen", "--order", "9", "--arc-prob", "0.4", "--seed", "5")
    _, b, _ = run(capsys, "gen", "--order", "9", "--arc-prob", "0.4", "--seed", "5")
    assert a == b and a.splitlines()[0] == "9"


def test_gen_family_and_pseudo_path(capsys):
    _, out, _ = run(capsys, "gen", "--family", "TransTournament", "--n", "3")
    assert out == "3\n0 1\n0 2\n1 2\n"
    _, out, _ = run(capsys, "gen", "--pseudo-path", "5", "--branches", "2,3,4")
    assert out == "5\n0 1\n2 1\n2 3\n4 3\n"


def test_check_exit_codes(capsys, files):
    g = files("zig.txt", "6\n0 1\n2 1\n2 3\n4 3\n4 5\n")
    code, out, _ = run(capsys, "check", g, "--cond", "d3", "--n", "3")
    assert code == 1 and json.loads(out)["status"] == "violated"
    code, out, _ = run(capsys, "check", g, "--cond", "d3", "--n", "4")
    assert code == 0
    bad = files("bad.txt", "2; 0 1; 1 0")
    assert run(capsys, "check", bad, "--cond", "d1", "--n", "3")[0] == 2


def test_solve_stats(capsys, files):
    g = files("x.txt", to_edge_list(X_SHAPE))
    for stat, value in [("pc", 2), ("pp", 3), ("alpha", 4), ("cp", 4), ("cc", 4), ("hampath", False)]:
        code, out, _ = run(capsys, "solve", g, "--stat", stat)
        assert code == 0 and json.loads(out)["value"] == value, stat


def test_solve_cap(capsys, files):
    g = files("p.txt", to_edge_list(directed_path(25)))
    assert run(capsys, "solve", g, "--stat", "pc")[0] == 2
    code, out, _ = run(capsys, "solve", g, "--stat", "pc", "--cap", "30")
    assert code == 0 and json.loads(out)["value"] == 1


def test_cover_then_verify(capsys, files, tmp_path):
    g = files("p.txt", to_edge_list(directed_path(12)))
    out = str(tmp_path / "c.json")
    assert run(capsys, "cover", g, "--n", "3", "--mode", "partition", "--out", out)[0] == 0
    code, text, _ = run(capsys, "verify", g, out)
    assert (code, text.strip()) == (0, "ok")


def test_cover_condition_violation(capsys, files):
    g = files("d1.txt", "7\n0 1\n1 3\n2 1\n3 2\n3 4\n4 5\n5 6\n")
    code, out, _ = run(capsys, "cover", g, "--n", "2")
    assert code == 1 and "condition" in out


def test_verify_messages(capsys, files):
    g = files("x.txt", to_edge_list(X_SHAPE))
    c = files("c.json", json.dumps({"kind": "path", "mode": "partition", "paths": [[0, 2, 1], [3, 2, 4]]}))
    code, out, _ = run(capsys, "verify", g, c)
    assert code == 1 and out.strip() == "vertex 2 in two paths"
    junk = files("j.json", "{")
    assert run(capsys, "verify", g, junk)[0] == 2


def test_cycle_theorem_subcommand(capsys, files):
    code, out, _ = run(capsys, "cycle-theorem", "--n", "3", "--max-order", "4")
    assert code == 0 and json.loads(out)["ok"]
    g = files("c3.txt", "3\n0 1\n1 2\n2 0\n")
    code, out, _ = run(capsys, "cycle-theorem", g, "--n", "3")
    assert code == 0 and json.loads(out)["cp_value"] == 1


def test_experiment_is_byte_stable(capsys):
    a = run(capsys, "experiment", "chain-law", "--trials", "15", "--seed", "2")
    b = run(capsys, "experiment", "chain-law", "--trials", "15", "--seed", "2")
    assert a == b and a[0] == 0


def test_experiment_pseudo_path_law_fails_honestly(capsys):
    code, out, _ = run(capsys, "experiment", "pseudo-path-law", "--trials", "40")
    report = json.loads(out)
    assert code == 1 and not report["passed"] and report["formula_passed"]


def test_text_format(capsys, files):
    g = files("p.txt", to_edge_list(directed_path(3)))
    code, out, _ = run(capsys, "solve", g, "--stat", "pc", "--format", "text")
    assert code == 0 and out.startswith("stat: pc\nvalue: 1\n")


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as info:
        main(["cover", "x", "--n", "1"])
    assert info.value.code == 2


def test_module_entry_point(tmp_path):
    g = tmp_path / "p.txt"
    g.write_text(to_edge_list(directed_path(3)))
    res = subprocess.run([sys.executable, "-m", "pathcover", "solve", str(g), "--stat", "pp"],
                         capture_output=True, text=True, check=True)
    assert json.loads(res.stdout)["value"] == 1

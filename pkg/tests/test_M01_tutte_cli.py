import json
import os

import pytest

import main.M01_tutte_cli as cli
from main.M01_tutte_cli import cmd_enumerate, run
from processes.P01_set_file_paths import ear_reduction_env_var
from processes.P07_bipoly import BiPoly
from processes.P09_tutte_engine import default_engine


def test_tutte_prints_polynomial(capsys):
    assert run(["tutte", "theta:2,2,2"]) == 0
    assert capsys.readouterr().out == "x^4 + 2x^3 + 3x^2 + x + 3xy + y + y^2\n"


@pytest.mark.parametrize("flag", ["--oracle", "--no-ears"])
def test_tutte_alternative_paths_agree(capsys, flag):
    assert run(["tutte", "box:1,1,1,1,1,1", flag]) == 0
    assert capsys.readouterr().out == "x^3 + 3x^2 + 2x + 4xy + 2y + 3y^2 + y^3\n"


def test_tutte_json(capsys):
    assert run(["tutte", "C3", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["text"] == "x^2 + x + y"
    assert payload["n"] == 3
    assert BiPoly.from_json(payload["tutte"]) == BiPoly.from_json([[2, 0, "1"], [1, 0, "1"], [0, 1, "1"]])


def test_tutte_from_edge_list_file(capsys, tmp_path):
    path = tmp_path / "paw.txt"
    path.write_text("4 4\n0 1\n1 2\n0 2\n0 3\n", encoding="utf-8")
    assert run(["tutte", f"@{path}"]) == 0
    assert capsys.readouterr().out == "x^3 + x^2 + xy\n"


def test_compare(capsys):
    assert run(["compare", "C3*C3", "theta:1,2,3"]) == 0
    assert capsys.readouterr().out == "Less, witness P = x + 1\n"
    assert run(["compare", "C4", "C3*K2"]) == 0
    assert capsys.readouterr().out == "Greater, witness P = 1\n"


def test_params(capsys):
    assert run(["params", "C3", "--json"]) == 0
    table = json.loads(capsys.readouterr().out)
    assert table["spanning_trees"] == "3"
    assert table["acyclic_orientations"] == "6"
    assert run(["params", "C3"]) == 0
    assert "spanning_forests" in capsys.readouterr().out


def test_enumerate(capsys):
    assert run(["enumerate", "-n", "5", "-m", "5"]) == 0
    assert capsys.readouterr().out == "5\n"
    assert run(["enumerate", "-n", "4", "-m", "4", "--list"]) == 0
    assert sorted(capsys.readouterr().out.split()) == ["C3*K2", "C4"]


def test_poset_table_and_files(capsys, tmp_path):
    assert run(["poset", "-n", "5", "-m", "5"]) == 0
    out = capsys.readouterr().out
    assert "classes: 3  cover edges: 2  chain: True" in out

    json_path, dot_path = tmp_path / "p.json", tmp_path / "p.dot"
    assert run(["poset", "-n", "5", "-m", "5", "--json", str(json_path), "--dot", str(dot_path)]) == 0
    data = json.loads(json_path.read_text(encoding="utf-8"))
    assert data["cover_edges"] == [[0, 1], [1, 2]]
    assert data["unique_maximum"] is True
    dot = dot_path.read_text(encoding="utf-8")
    assert "n0 -> n1;" in dot and "rankdir=BT;" in dot
    assert "Saved" in capsys.readouterr().err


def test_maximal(capsys):
    assert run(["maximal", "-n", "6", "-m", "6"]) == 0
    out = capsys.readouterr().out
    assert "C6" in out
    assert out.endswith("unique maximum: yes\n")


def test_verify(capsys):
    assert run(["verify", "cycle-evening", "--param", "a=5", "--param", "b=2", "--verbose"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("cycle-evening: ✅ pass")
    assert "C5*C2 vs C4*C3" in out
    assert run(["verify", "gnn-chain", "-n", "5"]) == 0


def test_verify_bad_param_is_domain_error(capsys):
    assert run(["verify", "parallel-ear", "--param", "a=2", "--param", "b=1"]) == 1
    assert "a - 1 > b" in capsys.readouterr().err
    assert run(["verify", "parallel-ear", "--param", "nonsense"]) == 1


def test_exit_codes(capsys):
    assert run(["tutte", "theta:1,1,2"]) == 1
    assert "theta" in capsys.readouterr().err
    assert run(["tutte", "@/no/such/file.txt"]) == 1
    assert run(["enumerate", "-n", "12", "-m", "11"]) == 2
    assert run(["tutte", "C25", "--oracle"]) == 2
    assert run(["enumerate", "-n", "5"]) == 1
    assert run(["bogus"]) == 1
    assert run(["--help"]) == 0


@pytest.mark.parametrize("argv", [
    ["verify", "box-evening", "--param", "box=box:1,3,1,1,1,2", "--param", "rule=x"],
    ["verify", "bridge-elim", "--param", "graph=C3", "--param", "edge=first"],
    ["verify", "parallel-ear", "--param", "a=5", "--param", "b=2", "--param", "rest=2,x"],
])
def test_verify_non_integer_param_exits_one(capsys, argv):
    assert run(argv) == 1
    assert "integer" in capsys.readouterr().err


def test_no_ears_reaches_workers_and_is_restored(capsys, monkeypatch):
    monkeypatch.delenv(ear_reduction_env_var, raising=False)
    seen = []
    real_handler = cmd_enumerate

    def spy(args):
        seen.append((os.environ.get(ear_reduction_env_var), default_engine().ear_reduction))
        return real_handler(args)

    monkeypatch.setattr(cli, "cmd_enumerate", spy)
    assert run(["enumerate", "-n", "4", "-m", "4", "--no-ears"]) == 0
    assert seen == [("0", False)]
    assert ear_reduction_env_var not in os.environ
    assert default_engine().ear_reduction is True
    capsys.readouterr()


@pytest.mark.parametrize("argv", [
    ["tutte", "box:2,1,1,1,1,1", "--json"],
    ["compare", "theta:2,2,2*K2", "theta:1,2,4"],
    ["params", "theta:1,2,3"],
    ["enumerate", "-n", "6", "-m", "7", "--list"],
    ["poset", "-n", "6", "-m", "7", "--json", "-"],
    ["maximal", "-n", "6", "-m", "8"],
    ["verify", "all", "-n", "5", "--count", "5", "--seed", "4", "--verbose"],
])
def test_output_is_deterministic(capsys, argv):
    first_code = run(argv)
    first = capsys.readouterr().out
    assert run(argv) == first_code
    assert capsys.readouterr().out == first
    assert run(argv + ["--threads", "2"]) == first_code
    assert capsys.readouterr().out == first


@pytest.mark.parametrize("command", ["tutte", "compare", "params", "enumerate", "poset", "maximal", "verify"])
def test_subcommand_help(capsys, command):
    assert run([command, "--help"]) == 0
    out = capsys.readouterr().out
    assert out.startswith(f"usage: tutte-poset {command}")

from __future__ import annotations

import io
import json
import subprocess
import sys

from conftest import J9_ALLOCATION, TABLE1
from jacobrush.cli import main
from jacobrush.digraph import DiGraph
from jacobrush.jaco import build_jaco


def run(capsys, argv, stdin_text=None, monkeypatch=None):
    if stdin_text is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin_text))
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


class TestBr:
    def test_json(self, capsys):
        code, out, _ = run(capsys, ["br", "--n", "9", "--format", "json"])
        assert code == 0
        data = json.loads(out)
        assert data["br"] == 6
        assert data["prime_index"] == 5
        assert data["sum_prefix"] == 5
        assert data["sum_hope"] == 1
        assert data["allocation"] == list(J9_ALLOCATION)

    def test_md(self, capsys):
        code, out, _ = run(capsys, ["br", "--n", "5"])
        assert code == 0
        assert "| br | 2 |" in out


class TestTable:
    def test_csv_matches_published(self, capsys):
        code, out, _ = run(capsys, ["table", "--max-n", "16", "--format", "csv"])
        assert code == 0
        lines = out.strip().split("\n")
        assert lines[0] == "i,d^-(v_i),d^+(v_i),v_j^*,b_r(J_i(1))"
        rows = [tuple(int(c) for c in line.split(",")) for line in lines[1:]]
        assert rows == TABLE1

    def test_md_golden(self, capsys):
        code, out, _ = run(capsys, ["table", "--max-n", "3"])
        assert code == 0
        assert out == (
            "| i | d^-(v_i) | d^+(v_i) | v_j^* | b_r(J_i(1)) |\n"
            "| --- | --- | --- | --- | --- |\n"
            "| 1 | 0 | 1 | v_1 | 0 |\n"
            "| 2 | 1 | 1 | v_1 | 1 |\n"
            "| 3 | 1 | 2 | v_2 | 1 |\n"
        )

    def test_deterministic(self, capsys):
        _, first, _ = run(capsys, ["table", "--max-n", "16"])
        _, second, _ = run(capsys, ["table", "--max-n", "16"])
        assert first == second


class TestGraphAndAllocation:
    def test_graph_json_exact(self, capsys):
        code, out, _ = run(capsys, ["graph", "--n", "5", "--format", "json"])
        assert code == 0
        assert out == build_jaco(5).to_json() + "\n"

    def test_graph_csv(self, capsys):
        code, out, _ = run(capsys, ["graph", "--n", "2", "--format", "csv"])
        assert code == 0
        assert out == "tail,head\n1,2\n"

    def test_allocation_json(self, capsys):
        code, out, _ = run(capsys, ["allocation", "--n", "9", "--format", "json"])
        assert code == 0
        assert json.loads(out) == list(J9_ALLOCATION)


class TestSimulate:
    def test_defined_orientation_default_allocation(self, capsys):
        code, out, _ = run(capsys, ["simulate", "--n", "9", "--format", "json"])
        assert code == 0
        data = json.loads(out)
        assert data["outcome"] == "cleaned"
        assert len(data["steps"]) == 9
        assert data["remaining_dirty"] == []

    def test_round_trip_via_stdin(self, capsys, monkeypatch):
        _, graph_out, _ = run(capsys, ["graph", "--n", "7", "--format", "json"])
        code, out, _ = run(
            capsys,
            ["simulate", "--graph", "-", "--format", "json"],
            stdin_text=graph_out,
            monkeypatch=monkeypatch,
        )
        assert code == 0
        assert json.loads(out)["outcome"] == "cleaned"
        # the derived allocation spends exactly the brush number
        _, alloc_out, _ = run(capsys, ["allocation", "--n", "7", "--format", "json"])
        _, br_out, _ = run(capsys, ["br", "--n", "7", "--format", "json"])
        assert sum(json.loads(alloc_out)) == json.loads(br_out)["br"]

    def test_allocation_file(self, capsys, tmp_path):
        graph_path = tmp_path / "cycle.json"
        graph_path.write_text(
            DiGraph(5, ((1, 2), (2, 3), (3, 4), (5, 3), (4, 5))).to_json()
        )
        alloc_path = tmp_path / "alloc.json"
        alloc_path.write_text("[9, 9, 9, 9, 9]")
        code, out, _ = run(
            capsys,
            [
                "simulate", "--graph", str(graph_path),
                "--allocation", str(alloc_path), "--format", "json",
            ],
        )
        assert code == 0
        data = json.loads(out)
        assert data["outcome"] == "undoable"
        assert data["remaining_dirty"] == [[3, 4], [4, 5], [5, 3]]

    def test_md_output(self, capsys):
        code, out, _ = run(capsys, ["simulate", "--n", "2"])
        assert code == 0
        assert out.startswith("outcome: cleaned\n")
        assert "| 1 | 1 | 1 | 1->2 |" in out


class TestCensusAndOracle:
    def test_census_json(self, capsys):
        code, out, _ = run(capsys, ["census", "--n", "5", "--format", "json"])
        assert code == 0
        data = json.loads(out)
        assert data["min"] == 2
        assert data["undoable_count"] == 8
        assert len(data["entries"]) == 32
        assert data["entries"][2]["cost"] == "undoable"

    def test_census_deterministic(self, capsys):
        _, first, _ = run(capsys, ["census", "--n", "5", "--format", "json"])
        _, second, _ = run(capsys, ["census", "--n", "5", "--format", "json"])
        assert first == second

    def test_census_csv_golden(self, capsys):
        code, out, _ = run(capsys, ["census", "--n", "2", "--format", "csv"])
        assert code == 0
        assert out == "mask,e_1,cost\n0,1->2,1\n1,2->1,1\n"

    def test_census_md_summary(self, capsys):
        code, out, _ = run(capsys, ["census", "--n", "5"])
        assert code == 0
        assert "minimum: 2" in out
        assert "undoable_count: 8" in out

    def test_oracle_json(self, capsys):
        code, out, _ = run(capsys, ["oracle", "--n", "5", "--format", "json"])
        assert code == 0
        assert json.loads(out) == {"n": 5, "eps": 5, "br": 2}

    def test_oracle_graph_file(self, capsys, tmp_path):
        path = tmp_path / "k3.json"
        path.write_text(DiGraph(3, ((1, 2), (1, 3), (2, 3))).to_json())
        code, out, _ = run(
            capsys, ["oracle", "--graph", str(path), "--format", "json"]
        )
        assert code == 0
        assert json.loads(out) == {"nu": 3, "eps": 3, "br": 2}


class TestExperiments:
    def test_hope_csv(self, capsys):
        code, out, _ = run(
            capsys, ["experiment", "hope", "--max-n", "5", "--format", "csv"]
        )
        assert code == 0
        lines = out.strip().split("\n")
        assert lines[0] == (
            "n,prime_index,br_jaco,hope_size,br_hope,bound_holds,linking_edges"
        )
        assert lines[5] == "5,3,2,2,1,true,2"

    def test_linking_json(self, capsys):
        code, out, _ = run(
            capsys, ["experiment", "linking", "--max-n", "9", "--format", "json"]
        )
        assert code == 0
        rows = json.loads(out)
        assert rows[-1] == {
            "n": 9,
            "prime_index": 5,
            "eps_total": 16,
            "eps_prefix": 5,
            "eps_hope": 6,
            "linking_edges": 5,
        }


class TestErrorsAndExitCodes:
    def test_unknown_command(self, capsys):
        assert run(capsys, ["bogus"])[0] == 2

    def test_missing_required_flag(self, capsys):
        assert run(capsys, ["br"])[0] == 2

    def test_nonpositive_n(self, capsys):
        assert run(capsys, ["br", "--n", "0"])[0] == 2

    def test_simulate_needs_input(self, capsys):
        code, _, err = run(capsys, ["simulate"])
        assert code == 2
        assert "--n or --graph" in err

    def test_missing_graph_file(self, capsys):
        code, _, err = run(capsys, ["oracle", "--graph", "/nonexistent.json"])
        assert code == 2
        assert "error" in err

    def test_allocation_length_mismatch(self, capsys, tmp_path):
        alloc_path = tmp_path / "short.json"
        alloc_path.write_text("[1]")
        code, _, err = run(
            capsys,
            ["simulate", "--n", "5", "--allocation", str(alloc_path)],
        )
        assert code == 2
        assert "does not match" in err

    def test_cap_exceeded_exit_code(self, capsys):
        code, _, err = run(capsys, ["census", "--n", "6", "--cap-eps", "3"])
        assert code == 3
        assert "cap" in err

    def test_env_cap(self, capsys, monkeypatch):
        monkeypatch.setenv("JACO_CAP_EPS", "3")
        assert run(capsys, ["census", "--n", "6", "--format", "json"])[0] == 3
        # an explicit flag overrides the environment
        assert run(capsys, ["census", "--n", "6", "--cap-eps", "7",
                            "--format", "json"])[0] == 0

    def test_env_cap_invalid(self, capsys, monkeypatch):
        monkeypatch.setenv("JACO_CAP_EPS", "many")
        code, _, err = run(capsys, ["census", "--n", "5"])
        assert code == 2
        assert "JACO_CAP_EPS" in err

    def test_help_exits_zero(self, capsys):
        assert run(capsys, ["--help"])[0] == 0


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "jacobrush.cli", "table", "--max-n", "3",
         "--format", "csv"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.startswith("i,")

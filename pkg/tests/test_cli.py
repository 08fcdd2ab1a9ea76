import json

import pytest

from dicolor import build_tournament, digraph_from_json, digraph_to_json
from dicolor.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestGenerate:
    def test_tournament_json(self, tmp_path, capsys):
        out = tmp_path / "t2.json"
        code, stdout, _ = run(capsys, "generate", "tournament", "--k", "2", "--out", str(out))
        assert code == 0
        assert "vertices: 9 arcs: 36" in stdout
        doc = json.loads(out.read_text())
        assert doc["vertices"] == 9 and len(doc["arcs"]) == 36

    def test_npartite_counts(self, tmp_path, capsys):
        out = tmp_path / "k32.json"
        code, stdout, _ = run(capsys, "generate", "npartite", "--n", "3", "--m", "2", "--out", str(out))
        assert code == 0
        assert "vertices: 6 arcs: 12" in stdout

    def test_dot_format(self, tmp_path, capsys):
        out = tmp_path / "t1.dot"
        code, _, _ = run(capsys, "generate", "tournament", "--k", "1", "--format", "dot", "--out", str(out))
        assert code == 0
        assert out.read_text().startswith("digraph {")

    def test_invalid_k_exits_2(self, tmp_path, capsys):
        code, stdout, stderr = run(capsys, "generate", "tournament", "--k", "0", "--out", str(tmp_path / "x"))
        assert code == 2
        assert stdout == "" and "error" in stderr

    def test_missing_params_exit_2(self, tmp_path, capsys):
        code, _, _ = run(capsys, "generate", "tournament", "--out", str(tmp_path / "x"))
        assert code == 2
        code, _, _ = run(capsys, "generate", "npartite", "--n", "3", "--out", str(tmp_path / "x"))
        assert code == 2


class TestSolve:
    def test_optimal_solve(self, tmp_path, capsys):
        path = tmp_path / "t2.json"
        path.write_text(json.dumps(digraph_to_json(build_tournament(2))))
        code, stdout, _ = run(capsys, "solve", str(path), "--constraint", "acyclic")
        assert code == 0
        doc = json.loads(stdout)
        assert doc["status"] == "optimal" and doc["value"] == 2
        assert len(doc["colors"]) == 9

    def test_acyclic_input_is_one(self, tmp_path, capsys):
        path = tmp_path / "chain.json"
        path.write_text(json.dumps({"vertices": 3, "arcs": [[0, 1], [1, 2]]}))
        code, stdout, _ = run(capsys, "solve", str(path))
        assert code == 0 and json.loads(stdout)["value"] == 1

    def test_node_limit_exits_3(self, tmp_path, capsys):
        path = tmp_path / "t3.json"
        path.write_text(json.dumps(digraph_to_json(build_tournament(3))))
        code, stdout, _ = run(capsys, "solve", str(path), "--max-nodes", "1")
        assert code == 3
        assert json.loads(stdout)["status"] == "aborted_at_limit"

    def test_parse_failure_exits_2(self, tmp_path, capsys):
        path = tmp_path / "broken.json"
        path.write_text("{not json")
        code, stdout, stderr = run(capsys, "solve", str(path))
        assert code == 2 and stdout == "" and stderr.count("\n") == 1

    def test_missing_file_exits_2(self, tmp_path, capsys):
        code, _, _ = run(capsys, "solve", str(tmp_path / "absent.json"))
        assert code == 2

    def test_round_trip_no_drift(self, tmp_path, capsys):
        path = tmp_path / "t2.json"
        run(capsys, "generate", "tournament", "--k", "2", "--out", str(path))
        parsed = digraph_from_json(json.loads(path.read_text()))
        direct = build_tournament(2)
        assert parsed.vertex_count == direct.vertex_count
        assert parsed.arcs == direct.arcs
        assert parsed.labels == direct.labels


class TestPartition:
    def test_construct_seven(self, tmp_path, capsys):
        out = tmp_path / "p7.json"
        code, stdout, _ = run(capsys, "partition", "construct", "--n", "7", "--out", str(out))
        assert code == 0
        assert "classes: 4" in stdout
        doc = json.loads(out.read_text())
        assert len(doc["classes"]) == 4

    def test_construct_to_stdout(self, capsys):
        code, stdout, stderr = run(capsys, "partition", "construct", "--n", "3")
        assert code == 0
        assert len(json.loads(stdout)["classes"]) == 2
        assert "classes: 2" in stderr

    def test_bruteforce_three(self, capsys):
        code, stdout, stderr = run(capsys, "partition", "bruteforce", "--n", "3")
        assert code == 0
        assert "classes: 2" in stderr
        assert len(json.loads(stdout)["classes"]) == 2

    def test_bruteforce_oversize_exits_2(self, capsys):
        code, _, stderr = run(capsys, "partition", "bruteforce", "--n", "6")
        assert code == 2 and "error" in stderr

    def test_svg_output(self, tmp_path, capsys):
        svg_path = tmp_path / "p7.svg"
        code, _, _ = run(capsys, "partition", "construct", "--n", "7", "--out", str(tmp_path / "p.json"), "--svg", str(svg_path))
        assert code == 0
        svg = svg_path.read_text()
        assert svg.count("<rect") == 49
        assert len({chunk.split('"')[0] for chunk in svg.split('fill="')[1:]}) == 4


class TestExportSvg:
    def test_single_cell(self, tmp_path, capsys):
        doc = tmp_path / "p1.json"
        doc.write_text(json.dumps({"n": 1, "m": 1, "classes": [[[1, 1]]]}))
        out = tmp_path / "p1.svg"
        code, _, _ = run(capsys, "export-svg", str(doc), "--out", str(out))
        assert code == 0
        assert out.read_text().count("<rect") == 1

    def test_byte_identical_reruns(self, tmp_path, capsys):
        doc = tmp_path / "p.json"
        run(capsys, "partition", "construct", "--n", "7", "--out", str(doc))
        first = tmp_path / "a.svg"
        second = tmp_path / "b.svg"
        assert run(capsys, "export-svg", str(doc), "--out", str(first))[0] == 0
        assert run(capsys, "export-svg", str(doc), "--out", str(second))[0] == 0
        assert first.read_bytes() == second.read_bytes()

    def test_malformed_exits_2(self, tmp_path, capsys):
        doc = tmp_path / "bad.json"
        doc.write_text(json.dumps({"n": 2, "m": 2, "classes": [[[1, 1]]]}))
        code, stdout, _ = run(capsys, "export-svg", str(doc), "--out", str(tmp_path / "x.svg"))
        assert code == 2 and stdout == ""


class TestVerify:
    def test_sigma_small(self, capsys):
        code, stdout, _ = run(capsys, "verify", "sigma", "--max-n", "3")
        assert code == 0
        assert "PASS" in stdout and "FAIL" not in stdout
        assert "claims passed" in stdout

    def test_tk_small(self, capsys):
        code, stdout, _ = run(capsys, "verify", "tk", "--max-k", "2")
        assert code == 0
        lines = [line for line in stdout.splitlines() if line.startswith("PASS")]
        assert len(lines) == 2

    def test_npartite_explicit_case(self, capsys):
        code, stdout, _ = run(capsys, "verify", "npartite", "--n", "8", "--m", "4")
        assert code == 0
        assert "bound-8x4" in stdout

    def test_output_sorted_by_claim_id(self, capsys):
        code, stdout, _ = run(capsys, "verify", "bounds")
        assert code == 0
        ids = [line.split()[1] for line in stdout.splitlines() if line.startswith(("PASS", "FAIL"))]
        assert ids == sorted(ids)

    def test_unknown_suite_exits_2(self, capsys):
        code, _, _ = run(capsys, "verify", "everything")
        assert code == 2


class TestUsage:
    def test_no_command(self, capsys):
        assert run(capsys, )[0] == 2

    def test_unknown_command(self, capsys):
        assert run(capsys, "frobnicate")[0] == 2

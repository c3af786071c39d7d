"""
Tests for the command-line interface
"""

import json
import os

import pytest

import cacd_cli
from analysis.reference_instances import COMPLEMENT_C6_REPRESENTATION, seven_vertex_digraph
from core.digraph import directed_cycle, transitive_tournament
from core.representation import CatchRepresentation, realize

C6_JSON = CatchRepresentation.from_values(*COMPLEMENT_C6_REPRESENTATION).to_json_dict()


def run(capsys, *argv):
    code = cacd_cli.main([str(a) for a in argv])
    captured = capsys.readouterr()
    data = json.loads(captured.out) if captured.out.strip() else None
    return code, data, captured.err


class TestRecognize:
    def test_accepted(self, capsys, write_json):
        path = write_json("c3.json", directed_cycle(3).to_json_dict())
        code, data, err = run(capsys, "recognize", path)
        assert code == cacd_cli.EXIT_ACCEPTED
        assert data["accepted"] is True
        assert data["certificate"]["kind"] == "representation"
        assert "✅" in err

    def test_beyond_the_search_bound(self, capsys, write_json):
        code, data, _ = run(capsys, "recognize", write_json("c12.json", directed_cycle(12).to_json_dict()))
        assert code == cacd_cli.EXIT_ACCEPTED
        assert len(data["certificate"]["ordering"]) == 12

    def test_rejected(self, capsys, write_json, d3):
        code, data, err = run(capsys, "recognize", write_json("d3.json", d3.to_json_dict()))
        assert code == cacd_cli.EXIT_REJECTED
        assert data["witness"]["kind"] == "exhausted"
        assert "❌" in err

    def test_proper_trace(self, capsys, write_json):
        path = write_json("g7.json", seven_vertex_digraph().to_json_dict())
        code, data, _ = run(capsys, "recognize", path, "--class", "proper", "--trace")
        assert code == 0
        assert data["certificate"]["trace"]["placement"] == "before m"

    def test_tournament_class_needs_tournament(self, capsys, write_json):
        path = write_json("c4.json", {"n": 4, "edges": [[0, 1], [1, 2], [2, 3], [3, 0]]})
        code, data, err = run(capsys, "recognize", path, "--class", "tournament")
        assert code == cacd_cli.EXIT_INPUT_ERROR
        assert data is None
        assert "not a tournament" in err

    def test_malformed_input(self, capsys, write_json):
        code, _, err = run(capsys, "recognize", write_json("bad.json", {"n": 3}))
        assert code == 2
        assert "invalid input" in err

    def test_broken_json_text(self, capsys, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{not json", encoding="utf-8")
        code, _, err = run(capsys, "recognize", path)
        assert code == 2
        assert "malformed JSON" in err

    def test_missing_file(self, capsys, tmp_path):
        code, _, err = run(capsys, "recognize", tmp_path / "absent.json")
        assert code == 2
        assert "file error" in err

    def test_usage_error(self):
        with pytest.raises(SystemExit) as exc:
            cacd_cli.main(["recognize"])
        assert exc.value.code == 2


class TestRepresentationCommands:
    def test_realize(self, capsys, write_json):
        code, data, _ = run(capsys, "realize", write_json("c6.json", C6_JSON))
        assert code == 0
        assert data["n"] == 6
        assert len(data["edges"]) == 9

    def test_verify(self, capsys, write_json):
        rep_path = write_json("c6.json", C6_JSON)
        g = realize(CatchRepresentation.from_json_dict(C6_JSON))
        code, data, _ = run(capsys, "verify", rep_path, write_json("g.json", g.to_json_dict()))
        assert code == 0
        assert data == {"verified": True, "missing": [], "extra": []}

    def test_verify_mismatch(self, capsys, write_json):
        rep_path = write_json("c6.json", C6_JSON)
        g = realize(CatchRepresentation.from_json_dict(C6_JSON)).with_edge_flipped(1, 0)
        code, data, _ = run(capsys, "verify", rep_path, write_json("g.json", g.to_json_dict()))
        assert code == 1
        assert data["missing"] == [[1, 0]]

    def test_render(self, capsys, write_json, tmp_path):
        svg, html = tmp_path / "c6.svg", tmp_path / "c6.html"
        code, _, _ = run(capsys, "render", write_json("c6.json", C6_JSON), "--svg", svg, "--html", html)
        assert code == 0
        assert svg.exists() and html.exists()

    def test_render_needs_output(self, capsys, write_json):
        code, _, err = run(capsys, "render", write_json("c6.json", C6_JSON))
        assert code == 2
        assert "precondition failed" in err


class TestDigraphCommands:
    def test_hampath(self, capsys, write_json):
        code, data, _ = run(capsys, "hampath", write_json("t4.json", transitive_tournament(4).to_json_dict()))
        assert code == 0
        assert data == {"path": [0, 1, 2, 3]}

    def test_hampath_needs_cacd(self, capsys, write_json, d3):
        code, _, err = run(capsys, "hampath", write_json("d3.json", d3.to_json_dict()))
        assert code == 2
        assert "precondition failed" in err

    def test_classify(self, capsys, write_json, triangle_into_sink):
        code, data, _ = run(capsys, "classify", write_json("t.json", triangle_into_sink.to_json_dict()))
        assert code == 0
        assert data["cacd"] is True
        assert data["tournament_cacd"] is True


class TestForbidden:
    def test_derive(self, capsys, tmp_path):
        out = tmp_path / "catalog"
        code, data, _ = run(capsys, "forbidden", "derive", "--max-n", 4, "--out", out)
        assert code == 0
        assert data["labels"] == ["D3"]
        assert data["files"] == 3
        assert (out / "catalog.json").exists()

    def test_derive_reports_deviation(self, capsys, tmp_path):
        code, data, err = run(capsys, "forbidden", "derive", "--max-n", 6, "--out", tmp_path / "catalog")
        assert code == cacd_cli.EXIT_REJECTED
        assert data["deviations"] == {"6": [1, 0]}
        assert data["deviation_report"] == [
            "CATALOG DEVIATION on 6 vertices: found 1 minimal non-CACD tournament(s), expected 0"
        ]
        assert "CATALOG DEVIATION on 6 vertices" in err


class TestSweep:
    def test_sweep_with_report_file(self, capsys, tmp_path):
        code, data, err = run(capsys, "sweep", "proper-grid-oracle", "--n", 3,
                              "--workers", 1, "--out", tmp_path)
        assert code == 0
        assert data["instances"] == 64
        assert os.path.exists(tmp_path / "proper-grid-oracle-n3.json")
        assert "Summary" in err

    def test_random_sweep(self, capsys):
        code, data, _ = run(capsys, "sweep", "random-roundtrip", "--count", 10, "--n", 4, "--seed", 3)
        assert code == 0
        assert data["statistics"]["seed"] == 3

    def test_missing_n(self, capsys):
        code, _, err = run(capsys, "sweep", "hamiltonian-path")
        assert code == 2
        assert "needs --n" in err

    def test_unknown_check(self, capsys):
        code, _, err = run(capsys, "sweep", "no-such-check", "--n", 3)
        assert code == 2
        assert "unknown check" in err

    def test_size_bound(self, capsys):
        code, _, err = run(capsys, "sweep", "proper-grid-oracle", "--n", 9)
        assert code == 2
        assert "size bound exceeded" in err

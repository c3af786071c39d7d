"""
Tests for report files and HTML pages
"""

import json
import os

from analysis.reference_instances import complement_c6_representation
from analysis.sweeps import sweep_digraphs
from core.report_generator import ReportGenerator
from visualizations.arc_diagram import ArcDiagramGenerator


def read_json(path):
    with open(path, encoding="utf-8") as f:
        return json.load(f)


class TestSweepReports:
    def test_file_name_and_content(self, tmp_path):
        report = sweep_digraphs(3, "proper-subset-cacd")
        path = ReportGenerator(str(tmp_path / "results")).write_sweep_report(report)
        assert os.path.basename(path) == "proper-subset-cacd-n3.json"
        assert read_json(path) == report.to_dict()


class TestCatalogFiles:
    def test_member_files_and_summary(self, tmp_path, small_catalog):
        paths = ReportGenerator(str(tmp_path)).write_catalog(small_catalog)
        names = sorted(os.path.basename(p) for p in paths)
        assert names == ["D3.annotation.json", "D3.json", "catalog.json"]
        assert all(os.path.dirname(p) == str(tmp_path / "catalog") for p in paths)

        summary = read_json(str(tmp_path / "catalog" / "catalog.json"))
        assert summary["schema"] == "cacd-catalog/1"
        assert summary["labels"] == ["D3"]
        assert summary["deviations"] == {}

        digraph = read_json(str(tmp_path / "catalog" / "D3.json"))
        assert digraph["n"] == 4 and len(digraph["edges"]) == 6
        assert "digraph" not in read_json(str(tmp_path / "catalog" / "D3.annotation.json"))

    def test_summary_keys(self, small_catalog):
        summary = ReportGenerator().catalog_summary(small_catalog)
        assert set(summary) == {"max_n", "counts", "deviations", "labels", "deviation_report"}
        assert summary["deviation_report"] == []


class TestHtml:
    def test_page_embeds_figure(self, tmp_path):
        fig = ArcDiagramGenerator().create_interactive_figure(complement_c6_representation())
        path = ReportGenerator().write_html({"Arc diagram": fig}, "Complement of C6",
                                            str(tmp_path / "out" / "c6.html"), caption="six arcs")
        with open(path, encoding="utf-8") as f:
            html = f.read()
        assert "<title>Complement of C6</title>" in html
        assert "six arcs" in html
        assert "figure-0" in html

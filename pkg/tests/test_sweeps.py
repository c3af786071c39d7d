"""
Tests for the property sweeps
"""

import pytest

from analysis.sweeps import (
    CHECKS,
    cbar8_orientation_sweep,
    complement_cycle_orientation_sweep,
    ordering_independence_survey,
    random_representation_sweep,
    sweep_digraphs,
)
from core.errors import PreconditionError, SizeBoundError, UnknownCheckError


def strip_timing(report):
    data = report.to_dict()
    data.pop("elapsed_ms")
    return data


class TestDigraphSweeps:
    @pytest.mark.parametrize("check, n", [
        ("proper-grid-oracle", 3),
        ("proper-subset-cacd", 3),
        ("cacd-exhaustive-agreement", 3),
        ("tucker-backend-agreement", 3),
        ("outdegree-zero-lemma", 4),
        ("hamiltonian-path", 4),
        ("oriented-proper-characterization", 4),
        ("underlying-round", 4),
        ("tournament-catalog", 4),
    ])
    def test_small_sweeps_pass(self, check, n):
        report = sweep_digraphs(n, check)
        assert report.passed, report.counterexamples
        assert report.family == CHECKS[check].family
        assert report.statistics.get("failed", 0) == 0

    def test_labeled_family_size(self):
        report = sweep_digraphs(3, "proper-grid-oracle")
        assert report.instances == 64
        assert report.statistics["passed"] == 64
        assert report.statistics.get("proper", 0) + report.statistics.get("not-proper", 0) == 64

    def test_ordering_survey_is_statistics_only(self):
        report = ordering_independence_survey(3)
        assert report.passed
        assert report.statistics["passed"] + report.statistics.get("skipped", 0) == 64

    def test_unknown_check(self):
        with pytest.raises(UnknownCheckError):
            sweep_digraphs(3, "no-such-check")

    def test_size_bound(self):
        with pytest.raises(SizeBoundError):
            sweep_digraphs(5, "proper-grid-oracle")

    def test_parallel_matches_serial(self):
        serial = sweep_digraphs(3, "cacd-exhaustive-agreement", workers=1)
        parallel = sweep_digraphs(3, "cacd-exhaustive-agreement", workers=2)
        assert strip_timing(serial) == strip_timing(parallel)

    @pytest.mark.slow
    @pytest.mark.parametrize("check, n", [
        ("proper-grid-oracle", 4),
        ("cacd-exhaustive-agreement", 4),
        ("tucker-backend-agreement", 4),
        ("outdegree-zero-lemma", 5),
        ("hamiltonian-path", 6),
        ("oriented-proper-characterization", 5),
        ("underlying-round", 5),
        ("tournament-catalog", 7),
    ])
    def test_full_sweeps_pass(self, check, n):
        report = sweep_digraphs(n, check, workers=None)
        assert report.passed, report.counterexamples


class TestReport:
    def test_json_and_frame(self):
        report = sweep_digraphs(3, "proper-subset-cacd")
        data = report.to_dict()
        assert data["schema"] == "cacd-sweep-report/1"
        assert data["check"] == "proper-subset-cacd"
        assert data["counterexamples"] == []
        frame = report.to_frame()
        assert list(frame.columns) == ["statistic", "value"]
        assert frame.iloc[0].tolist() == ["instances", 64]
        assert frame.iloc[-1]["statistic"] == "elapsed_ms"


class TestComplementCycleOrientations:
    def test_six_cycle(self):
        report = complement_cycle_orientation_sweep(6, workers=1)
        assert report.instances == 512
        assert report.statistics["acceptances"] >= 1
        assert report.counterexamples == []

    def test_unsupported_size(self):
        with pytest.raises(PreconditionError):
            complement_cycle_orientation_sweep(5, workers=1)

    @pytest.mark.slow
    def test_seven_cycle(self):
        report = complement_cycle_orientation_sweep(7)
        assert report.instances == 16384
        assert report.statistics["acceptances"] >= 1

    @pytest.mark.slow
    def test_eight_cycle_has_no_cacd_orientation(self):
        report = cbar8_orientation_sweep()
        assert report.instances == 1 << 20
        assert report.statistics["acceptances"] == 0
        assert report.passed


class TestRandomSweeps:
    def test_proper_round(self):
        report = random_representation_sweep("random-proper-round", count=40, max_n=5, seed=1)
        assert report.passed, report.counterexamples
        assert report.family == "random-proper"
        assert report.statistics["seed"] == 1
        assert report.instances == 40
        assert report.statistics["passed"] == 40
        assert report.statistics["drawn"] == 40 + report.statistics.get("skipped", 0)

    def test_same_seed_same_report(self):
        a = random_representation_sweep("random-roundtrip", count=20, max_n=5, seed=9)
        b = random_representation_sweep("random-roundtrip", count=20, max_n=5, seed=9)
        assert strip_timing(a) == strip_timing(b)

    def test_unknown_check(self):
        with pytest.raises(UnknownCheckError):
            random_representation_sweep("random-nothing")

    def test_size_bound(self):
        with pytest.raises(SizeBoundError):
            random_representation_sweep("random-proper-round", count=1, max_n=8)

    def test_skipped_draws_are_replaced(self):
        report = random_representation_sweep("random-proper-round", count=30, max_n=6, seed=4)
        assert report.instances == 30
        assert report.statistics["skipped"] > 0
        assert report.statistics["drawn"] == 30 + report.statistics["skipped"]

    @pytest.mark.slow
    def test_default_sweeps(self):
        assert random_representation_sweep("random-roundtrip").passed
        proper = random_representation_sweep("random-proper-round")
        assert proper.passed
        assert proper.instances == 1000
        assert proper.statistics["passed"] == 1000

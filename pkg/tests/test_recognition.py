"""
Tests for CACD recognition
"""

import pytest

from analysis.recognition import (
    is_cacd,
    recognize_cacd,
    recognize_tournament_cacd,
    representation_from_ordering,
)
from analysis.circular_ones import Ordering
from analysis.reference_instances import seven_vertex_digraph
from analysis.sweeps import random_representation_sweep
from core.digraph import (
    Digraph,
    complete_symmetric,
    directed_cycle,
    directed_path,
    empty_digraph,
    transitive_tournament,
)
from core.errors import NotATournamentError, PreconditionError
from core.representation import verify


class TestRecognizeCacd:
    @pytest.mark.parametrize("g", [
        directed_cycle(3),
        directed_cycle(5),
        transitive_tournament(7),
        complete_symmetric(4),
        empty_digraph(3),
    ], ids=["cycle3", "cycle5", "transitive7", "symmetric4", "empty3"])
    def test_accepts_with_verified_certificate(self, g):
        verdict = recognize_cacd(g)
        assert verdict.accepted
        assert verdict.certificate.kind == "representation"
        assert verify(verdict.certificate.representation, g)
        assert is_cacd(g)

    def test_dominated_triangle_is_rejected(self, d3):
        verdict = recognize_cacd(d3)
        assert not verdict.accepted
        assert verdict.witness.kind == "exhausted"
        assert not is_cacd(d3)

    def test_triangle_into_sink_is_accepted(self, triangle_into_sink):
        assert recognize_cacd(triangle_into_sink).accepted

    def test_budget_gives_truncated_witness(self, d3):
        verdict = recognize_cacd(d3, budget=1)
        assert not verdict.accepted
        assert verdict.witness.kind == "truncated"
        assert verdict.witness.detail == {"nodes": 1}

    @pytest.mark.parametrize("g", [directed_cycle(12), transitive_tournament(12), empty_digraph(11)],
                             ids=["cycle12", "transitive12", "empty11"])
    def test_large_digraphs_use_the_polynomial_order(self, g):
        verdict = recognize_cacd(g)
        assert verdict.accepted
        assert verify(verdict.certificate.representation, g)
        assert len(verdict.certificate.ordering) == g.n

    def test_large_non_cacd_is_rejected(self, d3):
        g = Digraph.from_edges(12, d3.edges())
        verdict = recognize_cacd(g)
        assert not verdict.accepted
        assert verdict.witness.kind == "no-circular-ones-order"
        assert not is_cacd(g)

    def test_verdict_json(self):
        data = recognize_cacd(directed_cycle(3)).to_dict()
        assert data["schema"] == "cacd-verdict/1"
        assert data["query"] == "cacd"
        assert data["certificate"]["ordering"] == [0, 1, 2]
        assert data["witness"] is None


class TestRepresentationFromOrdering:
    def test_points_follow_the_ordering(self):
        g = directed_cycle(3)
        rep = representation_from_ordering(g, Ordering((0, 1, 2)))
        assert rep.circumference == 4
        assert [p.value for p in rep.points] == [1, 2, 3]
        assert verify(rep, g)

    def test_broken_ordering(self, d3):
        with pytest.raises(PreconditionError):
            representation_from_ordering(d3, Ordering((0, 1, 2, 3)))

    @pytest.mark.parametrize("g", [seven_vertex_digraph(), complete_symmetric(4), directed_cycle(5)],
                             ids=["seven-vertex", "symmetric4", "cycle5"])
    def test_rotated_orderings_still_certify(self, g):
        order = recognize_cacd(g).certificate.ordering
        for k in range(g.n):
            rep = representation_from_ordering(g, order.rotated(k))
            assert verify(rep, g), k


class TestTournamentRecognition:
    def test_dominated_triangle_has_forbidden_witness(self, d3, small_catalog):
        verdict = recognize_tournament_cacd(d3, catalog=small_catalog)
        assert not verdict.accepted
        assert verdict.witness.kind == "induced-subdigraph"
        assert verdict.witness.detail["pattern"] == "D3"
        assert sorted(verdict.witness.vertices) == [0, 1, 2, 3]

    def test_transitive_tournament_is_forbidden_free(self, small_catalog):
        g = transitive_tournament(4)
        verdict = recognize_tournament_cacd(g, catalog=small_catalog)
        assert verdict.accepted
        assert verdict.certificate.kind == "forbidden-free"
        assert verify(verdict.certificate.representation, g)

    def test_sink_variant_is_accepted(self, triangle_into_sink, small_catalog):
        assert recognize_tournament_cacd(triangle_into_sink, catalog=small_catalog).accepted

    def test_requires_tournament(self, small_catalog):
        with pytest.raises(NotATournamentError):
            recognize_tournament_cacd(directed_path(3), catalog=small_catalog)


class TestRandomRoundTrip:
    def test_realized_digraphs_are_accepted(self):
        report = random_representation_sweep("random-roundtrip", count=60, max_n=6, seed=5)
        assert report.passed
        assert report.statistics["passed"] == 60

"""
Tests for the independent oracles
"""

import pytest

from analysis.oracles import (
    EXPECTED_CATALOG_COUNTS,
    derive_forbidden_catalog,
    directed_triangles,
    find_round_enumeration,
    grid_representation_oracle,
    grid_representation_witness,
    round_enumeration_oracle,
    set_system,
)
from analysis.oriented_cacd import is_round_enumeration
from core.digraph import (
    Digraph,
    directed_cycle,
    empty_digraph,
    transitive_tournament,
    undirected_cycle,
)
from core.errors import PreconditionError, SizeBoundError
from core.representation import is_proper, verify

TRIANGLE = [(0, 1), (1, 2), (2, 0)]


def triangle_plus(edges):
    return Digraph.from_edges(4, TRIANGLE + edges)


class TestSetSystem:
    def test_dominating_vertex_is_unassigned(self, d3):
        system = set_system(d3, (0, 1, 2))
        assert system.unassigned == frozenset({3})
        assert system.nonempty() == frozenset()
        assert system.pattern_label() == "D3"

    def test_sink_goes_to_s4(self, triangle_into_sink):
        system = set_system(triangle_into_sink, (0, 1, 2))
        assert system.nonempty() == frozenset({"S4"})
        assert system.pattern_label() is None

    def test_two_in_neighbours(self):
        system = set_system(triangle_plus([(0, 3), (2, 3), (3, 1)]), (0, 1, 2))
        assert system.sets["S'1"] == frozenset({3})

    def test_one_in_neighbour(self):
        system = set_system(triangle_plus([(0, 3), (3, 1), (3, 2)]), (0, 1, 2))
        assert system.sets["S''1"] == frozenset({3})

    def test_requires_directed_triangle(self):
        with pytest.raises(PreconditionError):
            set_system(transitive_tournament(3), (0, 1, 2))

    def test_directed_triangles(self, d3):
        assert directed_triangles(d3) == [(0, 1, 2)]
        assert directed_triangles(transitive_tournament(5)) == []


class TestForbiddenCatalog:
    def test_four_vertices(self, small_catalog):
        assert small_catalog.labels() == ["D3"]
        assert small_catalog.counts == {1: 0, 2: 0, 3: 0, 4: 1}
        assert small_catalog.deviations() == {}
        member = small_catalog.members[0]
        assert member.to_dict()["matches"]
        assert member.to_dict()["n"] == 4

    def test_catalog_json(self, small_catalog):
        data = small_catalog.to_dict()
        assert data["counts"]["4"] == 1
        assert data["deviations"] == {}
        assert len(data["members"]) == 1

    def test_six_vertex_member_is_reported(self):
        catalog = derive_forbidden_catalog(6)
        assert catalog.counts == {1: 0, 2: 0, 3: 0, 4: 1, 5: 0, 6: 1}
        assert catalog.deviations() == {6: (1, EXPECTED_CATALOG_COUNTS[6])}
        assert catalog.deviation_report() == [
            "CATALOG DEVIATION on 6 vertices: found 1 minimal non-CACD tournament(s), expected 0"
        ]
        extra = catalog.members[1]
        assert extra.label.startswith("unannotated-")
        assert extra.matches == ()
        system = set_system(extra.digraph, directed_triangles(extra.digraph)[0])
        assert system.pattern_label() is None

    @pytest.mark.slow
    def test_seven_vertices(self):
        catalog = derive_forbidden_catalog(7)
        assert catalog.counts == {1: 0, 2: 0, 3: 0, 4: 1, 5: 0, 6: 1, 7: 1}
        assert catalog.deviations() == {6: (1, 0), 7: (1, 4)}
        assert len(catalog.deviation_report()) == 2
        labels = catalog.labels()
        assert labels[0] == "D3"
        assert labels[1].startswith("unannotated-")
        assert labels[2] == "D4"
        assert "D4" in {name for name, _ in catalog.members[2].matches}


class TestGridOracle:
    def test_directed_triangle(self):
        rep = grid_representation_witness(directed_cycle(3))
        assert rep is not None
        assert rep.circumference == 13
        assert is_proper(rep) and verify(rep, directed_cycle(3))

    def test_dominated_triangle(self, d3):
        assert not grid_representation_oracle(d3)

    def test_size_bound(self):
        with pytest.raises(SizeBoundError):
            grid_representation_oracle(empty_digraph(5))


class TestRoundOracle:
    def test_cycle_is_round(self):
        found = find_round_enumeration(undirected_cycle(5))
        assert found is not None
        order, oriented = found
        assert is_round_enumeration(oriented, order)[0]

    def test_claw_is_not_round(self):
        claw = Digraph.from_edges(4, [(0, 1), (1, 0), (0, 2), (2, 0), (0, 3), (3, 0)])
        assert not round_enumeration_oracle(claw)

    def test_single_vertex(self):
        assert round_enumeration_oracle(empty_digraph(1))

    @pytest.mark.parametrize("g", [directed_cycle(3), empty_digraph(2)], ids=["asymmetric", "disconnected"])
    def test_preconditions(self, g):
        with pytest.raises(PreconditionError):
            round_enumeration_oracle(g)

    def test_size_bound(self):
        with pytest.raises(SizeBoundError):
            round_enumeration_oracle(empty_digraph(9))

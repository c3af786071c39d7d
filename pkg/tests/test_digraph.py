"""
Tests for the digraph model
"""

import networkx as nx
import numpy as np
import pytest
from networkx.algorithms.isomorphism import DiGraphMatcher

from analysis.enumeration import enumerate_labeled_digraphs
from conftest import to_networkx
from core.digraph import (
    Digraph,
    canonical_form,
    complement_cycle,
    complete_symmetric,
    directed_cycle,
    directed_path,
    empty_digraph,
    find_induced,
    is_oriented,
    is_symmetric,
    orient,
    predicates,
    tournament_from_bits,
    transitive_tournament,
    underlying_graph,
    undirected_cycle,
    undirected_edges,
    weak_components,
)
from core.errors import InputFormatError, PreconditionError, SizeBoundError


def random_digraph(rng, n, density=0.4):
    edges = [(u, v) for u in range(n) for v in range(n) if u != v and rng.random() < density]
    return Digraph.from_edges(n, edges)


class TestConstruction:
    def test_from_edges(self):
        g = Digraph.from_edges(3, [(0, 1), (1, 2)])
        assert g.out_masks == (0b010, 0b100, 0)
        assert g.has_edge(0, 1) and not g.has_edge(1, 0)
        assert g.edge_count() == 2

    @pytest.mark.parametrize("n, edges", [
        (3, [(0, 1), (0, 1)]),
        (3, [(1, 1)]),
        (3, [(0, 3)]),
        (0, []),
        (3, [(0, 1, 2)]),
    ])
    def test_rejects_bad_edge_lists(self, n, edges):
        with pytest.raises(InputFormatError):
            Digraph.from_edges(n, edges)

    def test_from_adjacency(self):
        g = Digraph.from_adjacency([[0, 1], [0, 0]])
        assert g == Digraph.from_edges(2, [(0, 1)])

    def test_json_keys_required(self):
        with pytest.raises(InputFormatError):
            Digraph.from_json_dict({"n": 2})
        with pytest.raises(InputFormatError):
            Digraph.from_json_dict({"n": 2, "edges": "0-1"})

    def test_json_round_trip(self):
        g = directed_cycle(4)
        assert Digraph.from_json_dict(g.to_json_dict()) == g

    def test_neighbourhoods(self):
        g = Digraph.from_edges(3, [(0, 1), (2, 1)])
        assert g.successors(0) == [1]
        assert g.predecessors(1) == [0, 2]
        assert g.in_degree(1) == 2 and g.out_degree(1) == 0
        assert g.adjacency.tolist() == [[False, True, False], [False, False, False], [False, True, False]]


class TestDerivedDigraphs:
    def test_induced_relabels_in_given_order(self):
        g = directed_path(4)
        sub = g.induced([2, 1])
        assert sub.edges() == [(1, 0)]

    def test_relabel(self):
        g = Digraph.from_edges(3, [(0, 1)])
        assert g.relabel([2, 0, 1]).edges() == [(2, 0)]

    def test_with_edge_flipped(self):
        g = directed_path(2)
        assert g.with_edge_flipped(0, 1) == empty_digraph(2)
        assert g.with_edge_flipped(1, 0).edges() == [(0, 1), (1, 0)]

    def test_underlying_graph(self):
        u = underlying_graph(directed_cycle(3))
        assert is_symmetric(u)
        assert u == complete_symmetric(3)


class TestPredicates:
    def test_directed_cycle(self):
        flags = predicates(directed_cycle(3))
        assert flags.is_oriented and flags.is_tournament
        assert flags.is_unilateral and flags.is_connected

    def test_symmetric_is_not_oriented(self):
        assert not is_oriented(complete_symmetric(3))

    def test_two_sources_into_one_sink(self):
        flags = predicates(Digraph.from_edges(3, [(0, 1), (2, 1)]))
        assert flags.is_connected
        assert not flags.is_unilateral
        assert not flags.is_tournament

    def test_disconnected(self):
        flags = predicates(empty_digraph(2))
        assert not flags.is_connected
        assert predicates(empty_digraph(1)).is_unilateral

    def test_weak_components(self):
        g = Digraph.from_edges(5, [(0, 1), (3, 2)])
        assert weak_components(g) == [[0, 1], [2, 3], [4]]

    def test_to_dict(self):
        assert predicates(transitive_tournament(3)).to_dict() == {
            "oriented": True, "tournament": True, "unilateral": True, "connected": True,
        }


class TestFindInduced:
    def test_acyclic_host_has_no_triangle(self):
        assert find_induced(transitive_tournament(4), directed_cycle(3)) is None

    def test_mapping_is_an_induced_copy(self, d3):
        phi = find_induced(d3, directed_cycle(3))
        assert phi is not None
        assert d3.induced(list(phi)) == directed_cycle(3)

    def test_pattern_larger_than_host(self):
        assert find_induced(directed_cycle(3), transitive_tournament(4)) is None

    def test_agrees_with_networkx(self):
        rng = np.random.default_rng(7)
        for _ in range(60):
            host = random_digraph(rng, 5)
            pattern = random_digraph(rng, 3, density=0.5)
            expected = DiGraphMatcher(to_networkx(host), to_networkx(pattern)).subgraph_is_isomorphic()
            assert (find_induced(host, pattern) is not None) == expected


class TestCanonicalForm:
    def test_relabelling_invariant(self):
        g = Digraph.from_edges(4, [(0, 1), (1, 2), (2, 0), (3, 0)])
        assert canonical_form(g) == canonical_form(g.relabel([3, 1, 0, 2]))

    def test_agrees_with_networkx(self):
        rng = np.random.default_rng(11)
        for _ in range(80):
            a = random_digraph(rng, 5, density=0.3)
            b = random_digraph(rng, 5, density=0.3)
            same = canonical_form(a) == canonical_form(b)
            assert same == nx.is_isomorphic(to_networkx(a), to_networkx(b))

    @pytest.mark.parametrize("n, classes", [
        (1, 1),
        (2, 3),
        (3, 16),
        pytest.param(4, 218, marks=pytest.mark.slow),
    ])
    def test_equal_forms_are_exactly_the_isomorphic_pairs(self, n, classes):
        groups = {}
        for g in enumerate_labeled_digraphs(n):
            groups.setdefault(canonical_form(g), []).append(g)
        assert len(groups) == classes

        representatives = [to_networkx(members[0]) for members in groups.values()]
        for members, rep in zip(groups.values(), representatives):
            assert all(nx.is_isomorphic(to_networkx(g), rep) for g in members[1:])
        for i, a in enumerate(representatives):
            assert not any(nx.is_isomorphic(a, b) for b in representatives[i + 1:])

    def test_size_bound(self):
        with pytest.raises(SizeBoundError):
            canonical_form(empty_digraph(9))


class TestGenerators:
    def test_complement_cycle(self):
        g = complement_cycle(6)
        assert is_symmetric(g)
        assert all(g.out_degree(v) == 3 for v in range(6))
        assert not g.has_edge(0, 1) and not g.has_edge(0, 5) and g.has_edge(0, 2)

    def test_small_cycles_rejected(self):
        with pytest.raises(PreconditionError):
            complement_cycle(3)
        with pytest.raises(PreconditionError):
            directed_cycle(2)
        with pytest.raises(PreconditionError):
            undirected_cycle(2)

    def test_undirected_triangle_has_no_repeated_edges(self):
        assert undirected_cycle(3) == complete_symmetric(3)
        assert undirected_cycle(3).edge_count() == 6

    def test_tournament_from_bits(self):
        assert tournament_from_bits(3, 0b111) == transitive_tournament(3)
        assert predicates(tournament_from_bits(4, 0b101010)).is_tournament

    def test_orient(self):
        cycle = undirected_cycle(4)
        assert undirected_edges(cycle) == [(0, 1), (0, 3), (1, 2), (2, 3)]
        oriented = orient(cycle, 0b1101)
        assert oriented.edges() == [(0, 1), (1, 2), (2, 3), (3, 0)]
        assert underlying_graph(oriented) == cycle

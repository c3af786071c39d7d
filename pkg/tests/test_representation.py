"""
Tests for catch representations
"""

from fractions import Fraction

import pytest

from analysis.reference_instances import complement_c6_representation, complement_c7_representation
from core.digraph import Digraph, complement_cycle, is_oriented, underlying_graph
from core.errors import InputFormatError, InvalidRepresentationError, PreconditionError
from core.representation import (
    CatchRepresentation,
    CirclePos,
    CircularArc,
    arc_contains,
    arc_within,
    arcs_are_proper,
    edge_diff,
    is_proper,
    realize,
    verify,
)


class TestArcs:
    def test_position_range(self):
        with pytest.raises(ValueError):
            CirclePos(7, 7)
        assert CirclePos(Fraction(1, 2), 7).shifted(7).value == Fraction(1, 2)

    def test_wrapping_arc(self):
        arc = CircularArc.of(6, 1, 7)
        assert arc.length == 2
        assert arc_contains(arc, CirclePos(0, 7))
        assert not arc_contains(arc, CirclePos(3, 7))

    def test_single_point_arc(self):
        arc = CircularArc.of(2, 2, 5)
        assert arc.length == 0
        assert arc_contains(arc, CirclePos(2, 5))
        assert not arc_contains(arc, CirclePos(3, 5))

    def test_circumference_mismatch(self):
        with pytest.raises(ValueError):
            arc_contains(CircularArc.of(0, 1, 5), CirclePos(0, 6))

    def test_properness(self):
        inner, outer = CircularArc.of(1, 2, 8), CircularArc.of(0, 3, 8)
        assert arc_within(inner, outer) and not arc_within(outer, inner)
        assert not arcs_are_proper([inner, outer])
        assert arcs_are_proper([outer, CircularArc.of(0, 3, 8)])
        assert arcs_are_proper([CircularArc.of(0, 3, 8), CircularArc.of(2, 5, 8)])


class TestCatchRepresentation:
    def test_point_outside_arc(self):
        with pytest.raises(InvalidRepresentationError):
            CatchRepresentation.from_values(5, [(0, 1, 3)])

    def test_points_must_be_distinct(self):
        with pytest.raises(InvalidRepresentationError):
            CatchRepresentation.from_values(5, [(0, 2, 1), (1, 3, 1)])

    def test_json_parsing(self):
        rep = CatchRepresentation.from_json_dict(
            {"L": "7", "arcs": [{"a": "1.9", "b": "2.1", "p": 2}, {"a": "15/8", "b": 6, "p": "3"}]}
        )
        assert rep.arcs[0].a.value == Fraction(19, 10)
        assert rep.arcs[1].a.value == Fraction(15, 8)
        data = rep.to_json_dict(decimals=True)
        assert data["L"] == "7/1"
        assert data["arcs"][1]["decimal"]["a"] == pytest.approx(1.875)

    @pytest.mark.parametrize("data", [
        {"arcs": []},
        {"L": 5, "arcs": [{"a": 0, "b": 1}]},
        {"L": 5, "arcs": [{"a": "x", "b": 1, "p": 0}]},
    ])
    def test_malformed_json(self, data):
        with pytest.raises(InputFormatError):
            CatchRepresentation.from_json_dict(data)

    def test_rotation_preserves_digraph(self):
        rep = complement_c6_representation()
        assert realize(rep.rotated(Fraction(5, 2))) == realize(rep)

    def test_point_order(self):
        rep = complement_c6_representation()
        assert rep.point_order() == [5, 1, 2, 4, 0, 3]


class TestRealize:
    def test_complement_six_cycle_example(self):
        g = realize(complement_c6_representation())
        assert is_oriented(g)
        assert underlying_graph(g) == complement_cycle(6)

    def test_complement_seven_cycle_example(self):
        g = realize(complement_c7_representation())
        assert is_oriented(g)
        assert underlying_graph(g) == complement_cycle(7)

    def test_verify_and_diff(self):
        rep = complement_c6_representation()
        g = realize(rep)
        assert verify(rep, g)
        missing, extra = edge_diff(rep, g.with_edge_flipped(1, 0))
        assert missing == [(1, 0)] and extra == []
        missing, extra = edge_diff(rep, g.with_edge_flipped(0, 2))
        assert missing == [] and extra == [(0, 2)]

    def test_size_mismatch(self):
        with pytest.raises(PreconditionError):
            edge_diff(complement_c6_representation(), Digraph(2, (0, 0)))

    def test_congruent_arcs_give_directed_triangle(self):
        rep = CatchRepresentation.from_values(6, [(0, 2, 0), (2, 4, 2), (4, 0, 4)])
        assert is_proper(rep)
        assert realize(rep).edges() == [(0, 1), (1, 2), (2, 0)]

"""
Catch representations on an exact-rational circle
Arcs, points, realization into a digraph, properness and certificate checks
"""

from dataclasses import dataclass
from fractions import Fraction

from core.digraph import Digraph
from core.errors import InputFormatError, InvalidRepresentationError, PreconditionError
from utils.helpers import format_rational, parse_rational, rational_to_decimal


@dataclass(frozen=True)
class CirclePos:
    """A position in [0, L) on a circle of circumference L."""

    value: Fraction
    circumference: Fraction

    def __post_init__(self):
        value = Fraction(self.value)
        circumference = Fraction(self.circumference)
        if circumference <= 0:
            raise ValueError(f"circumference must be positive, got {circumference}")
        if not 0 <= value < circumference:
            raise ValueError(f"position {value} outside [0, {circumference})")
        object.__setattr__(self, "value", value)
        object.__setattr__(self, "circumference", circumference)

    def shifted(self, offset):
        return CirclePos((self.value + offset) % self.circumference, self.circumference)


@dataclass(frozen=True)
class CircularArc:
    """Closed clockwise arc from a to b; a == b is the single point a."""

    a: CirclePos
    b: CirclePos

    def __post_init__(self):
        if self.a.circumference != self.b.circumference:
            raise ValueError("arc endpoints lie on circles of different circumference")

    @classmethod
    def of(cls, a, b, circumference):
        return cls(CirclePos(a, circumference), CirclePos(b, circumference))

    @property
    def circumference(self):
        return self.a.circumference

    @property
    def length(self):
        return (self.b.value - self.a.value) % self.circumference

    def shifted(self, offset):
        return CircularArc(self.a.shifted(offset), self.b.shifted(offset))


def arc_contains(arc, p):
    """True iff p lies on the closed arc."""
    if arc.circumference != p.circumference:
        raise ValueError(
            f"circumference mismatch: arc on {arc.circumference}, point on {p.circumference}"
        )
    a, b, x = arc.a.value, arc.b.value, p.value
    if a <= b:
        return a <= x <= b
    return x >= a or x <= b


def arc_within(inner, outer):
    """Point-set inclusion of closed arcs (neither is the full circle)."""
    offset = (inner.a.value - outer.a.value) % outer.circumference
    return offset + inner.length <= outer.length


def arcs_are_proper(arcs):
    """True iff no arc is a proper subset of another."""
    for i, u in enumerate(arcs):
        for j, v in enumerate(arcs):
            if i != j and arc_within(u, v) and (u.a, u.b) != (v.a, v.b):
                return False
    return True


@dataclass(frozen=True)
class CatchRepresentation:
    """Per-vertex arc and point; vertex v owns arcs[v] and points[v]."""

    circumference: Fraction
    arcs: tuple
    points: tuple

    def __post_init__(self):
        object.__setattr__(self, "circumference", Fraction(self.circumference))
        object.__setattr__(self, "arcs", tuple(self.arcs))
        object.__setattr__(self, "points", tuple(self.points))
        if not self.arcs or len(self.arcs) != len(self.points):
            raise InvalidRepresentationError(
                f"need one arc per point, got {len(self.arcs)} arcs and {len(self.points)} points"
            )
        for v, (arc, p) in enumerate(zip(self.arcs, self.points)):
            if arc.circumference != self.circumference or p.circumference != self.circumference:
                raise InvalidRepresentationError(f"vertex {v} uses a different circumference")
            if not arc_contains(arc, p):
                raise InvalidRepresentationError(f"point of vertex {v} lies outside its arc")
        values = [p.value for p in self.points]
        if len(set(values)) != len(values):
            raise InvalidRepresentationError("two vertices share the same point")

    @classmethod
    def from_values(cls, circumference, entries):
        """
        Build from plain numbers.

        Parameters:
        circumference: L, anything parse_rational accepts
        entries (list): (a, b, p) triples per vertex

        Returns:
        CatchRepresentation: The validated representation
        """
        L = parse_rational(circumference)
        arcs, points = [], []
        for a, b, p in entries:
            arcs.append(CircularArc.of(parse_rational(a), parse_rational(b), L))
            points.append(CirclePos(parse_rational(p), L))
        return cls(L, arcs, points)

    @classmethod
    def from_json_dict(cls, data):
        if not isinstance(data, dict) or "L" not in data or "arcs" not in data:
            raise InputFormatError('representation JSON needs the keys "L" and "arcs"')
        entries = []
        for k, arc in enumerate(data["arcs"]):
            if not isinstance(arc, dict) or not {"a", "b", "p"} <= arc.keys():
                raise InputFormatError(f'arc {k} needs the keys "a", "b" and "p"')
            entries.append((arc["a"], arc["b"], arc["p"]))
        try:
            return cls.from_values(data["L"], entries)
        except InvalidRepresentationError:
            raise
        except ValueError as e:
            raise InputFormatError(str(e)) from None

    def to_json_dict(self, decimals=False):
        def entry(value):
            return format_rational(value)

        arcs = []
        for arc, p in zip(self.arcs, self.points):
            item = {"a": entry(arc.a.value), "b": entry(arc.b.value), "p": entry(p.value)}
            if decimals:
                item["decimal"] = {
                    "a": rational_to_decimal(arc.a.value),
                    "b": rational_to_decimal(arc.b.value),
                    "p": rational_to_decimal(p.value),
                }
            arcs.append(item)
        return {"L": format_rational(self.circumference), "arcs": arcs}

    @property
    def n(self):
        return len(self.arcs)

    def rotated(self, offset):
        """Every position moved clockwise by `offset` modulo L."""
        return CatchRepresentation(
            self.circumference,
            [arc.shifted(offset) for arc in self.arcs],
            [p.shifted(offset) for p in self.points],
        )

    def point_order(self):
        """Vertices sorted by increasing point position."""
        return sorted(range(self.n), key=lambda v: self.points[v].value)


def realize(rep):
    """The catch digraph: u->v iff u != v and p_v lies on I_u."""
    rows = []
    for u, arc in enumerate(rep.arcs):
        row = 0
        for v, p in enumerate(rep.points):
            if u != v and arc_contains(arc, p):
                row |= 1 << v
        rows.append(row)
    return Digraph(rep.n, tuple(rows))


def is_proper(rep):
    return arcs_are_proper(rep.arcs)


def edge_diff(rep, g):
    """
    Compare a representation against a digraph.

    Returns:
    tuple: (edges of g the representation misses, edges it adds)
    """
    if rep.n != g.n:
        raise PreconditionError("verify", f"representation has {rep.n} vertices, digraph has {g.n}")
    realized = realize(rep)
    expected, actual = set(g.edges()), set(realized.edges())
    return sorted(expected - actual), sorted(actual - expected)


def verify(rep, g):
    missing, extra = edge_diff(rep, g)
    return not missing and not extra

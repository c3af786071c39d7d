"""
Oriented circular-arc catch digraphs
Outdegree-zero lemma, Hamiltonian paths, the quadruple-condition search for
oriented proper CACDs, complement-cycle checks and round orientations
"""

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from analysis.circular_ones import Ordering
from analysis.proper_cacd import recognize_proper_cacd
from analysis.recognition import recognize_cacd, recognize_tournament_cacd
from config.settings import ORIENTED_PROPER_MAX_N
from core.digraph import (
    Digraph,
    complement_cycle,
    find_induced,
    is_oriented,
    iter_bits,
    predicates,
    underlying_graph,
)
from core.errors import (
    CharacterizationMismatch,
    ConstructionError,
    LemmaViolation,
    NotOrientedError,
    PreconditionError,
    SizeBoundError,
)
from core.representation import CircularArc, arc_contains, is_proper, realize
from core.verdict import Certificate, Verdict, Witness

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CircularVertexOrder:
    """A cyclic sequence of all vertices; rotations describe the same order."""

    order: tuple

    def __post_init__(self):
        order = tuple(int(v) for v in self.order)
        if sorted(order) != list(range(len(order))):
            raise ValueError(f"not a permutation: {order}")
        object.__setattr__(self, "order", order)

    def __len__(self):
        return len(self.order)

    def __iter__(self):
        return iter(self.order)

    def rotations(self):
        k = len(self.order)
        return [CircularVertexOrder(self.order[i:] + self.order[:i]) for i in range(k)]

    def anchored(self):
        i = self.order.index(0)
        return CircularVertexOrder(self.order[i:] + self.order[:i])

    def same_cycle(self, other):
        return self.anchored() == other.anchored()

    def to_ordering(self):
        return Ordering(self.order)


# ----------------------------------------------------------------------
# Structural lemmas
# ----------------------------------------------------------------------

def outdegree_zero_witness(g):
    """
    A vertex of outdegree zero.

    Every oriented CACD without a directed Hamiltonian cycle has one; the
    input is not re-checked against that hypothesis, but a missing sink is
    reported as a LemmaViolation.
    """
    for v in range(g.n):
        if g.out_masks[v] == 0:
            return v
    raise LemmaViolation("outdegree-zero", f"no vertex of outdegree zero in {g}")


def find_hamiltonian_cycle(g, vertices=None):
    """
    Directed Hamiltonian cycle of the subdigraph induced by `vertices`.

    Bitmask dynamic programming over paths starting at the first vertex.

    Returns:
    list or None: The cycle as a vertex sequence (closing edge implied)
    """
    vs = list(range(g.n)) if vertices is None else list(vertices)
    k = len(vs)
    if k < 2:
        return None
    adjacent = [[g.has_edge(vs[i], vs[j]) for j in range(k)] for i in range(k)]
    full = (1 << k) - 1
    reach = [0] * (1 << k)
    reach[1] = 1
    for mask in range(1, 1 << k, 2):
        for j in iter_bits(reach[mask]):
            for t in range(k):
                if not (mask >> t) & 1 and adjacent[j][t]:
                    reach[mask | (1 << t)] |= 1 << t

    closing = [j for j in iter_bits(reach[full]) if j != 0 and adjacent[j][0]]
    if not closing:
        return None
    path = []
    mask, j = full, closing[0]
    while j != 0:
        path.append(j)
        mask ^= 1 << j
        j = next(i for i in iter_bits(reach[mask]) if adjacent[i][j])
    path.append(0)
    path.reverse()
    return [vs[i] for i in path]


def is_hamiltonian_path(g, path):
    if sorted(path) != list(range(g.n)):
        return False
    return all(g.has_edge(u, v) for u, v in zip(path, path[1:]))


def hamiltonian_path(g):
    """
    Directed Hamiltonian path of a unilateral oriented CACD.

    While the remaining vertex set has no Hamiltonian cycle its unique sink
    is peeled off; each peeled sink has an edge into the previous one. The
    final cycle (if any) is cut just after an in-neighbour of the last
    peeled vertex.

    Parameters:
    g (Digraph): A unilateral oriented CACD

    Returns:
    list: Vertex sequence whose consecutive pairs are edges of g
    """
    flags = predicates(g)
    if not flags.is_oriented:
        raise NotOrientedError("hamiltonian_path needs an oriented digraph")
    if not flags.is_unilateral:
        raise PreconditionError("hamiltonian_path", "digraph is not unilateral")

    remaining = set(range(g.n))
    peeled = []
    prefix = []
    while remaining:
        members = sorted(remaining)
        cycle = find_hamiltonian_cycle(g, members)
        if cycle is not None:
            if not peeled:
                prefix = cycle
            else:
                target = peeled[-1]
                cut = next((i for i, u in enumerate(cycle) if g.has_edge(u, target)), None)
                if cut is None:
                    raise LemmaViolation("splice-cycle", f"no cycle vertex has an edge into {target}")
                prefix = cycle[cut + 1:] + cycle[:cut + 1]
            break

        inside = sum(1 << v for v in members)
        sinks = [v for v in members if not g.out_masks[v] & inside]
        if not sinks:
            raise LemmaViolation("outdegree-zero", f"no sink among {members}")
        if len(sinks) > 1:
            raise LemmaViolation("unilateral", f"sinks {sinks} cannot reach each other")
        sink = sinks[0]
        if peeled and not g.has_edge(sink, peeled[-1]):
            raise LemmaViolation("splice-sink", f"no edge {sink}->{peeled[-1]}")
        peeled.append(sink)
        remaining.discard(sink)

    path = prefix + peeled[::-1]
    if not is_hamiltonian_path(g, path):
        raise LemmaViolation("path-check", f"assembled sequence {path} is not a Hamiltonian path")
    return path


# ----------------------------------------------------------------------
# Oriented proper CACDs
# ----------------------------------------------------------------------

def _quadruple_violation(g, a, b, c, d):
    """First rotation (u, v, w, x) of the cyclic quadruple breaking the condition."""
    quad = (a, b, c, d)
    for k in range(4):
        u, v, w, x = quad[k:] + quad[:k]
        if g.has_edge(u, w):
            if not ((g.has_edge(u, v) and g.has_edge(v, w)) or (g.has_edge(u, x) and g.has_edge(x, w))):
                return (u, v, w, x)
    return None


def check_quadruple_condition(g, sigma):
    """
    For u <v <w <x cyclically in sigma with uw an edge, require uv, vw or ux, xw.

    Returns:
    tuple: (holds, violating quadruple or None)
    """
    order = list(sigma)
    if sorted(order) != list(range(g.n)):
        raise PreconditionError("check_quadruple_condition", f"{order} is not an ordering of the vertices")
    for a, b, c, d in combinations(order, 4):
        witness = _quadruple_violation(g, a, b, c, d)
        if witness is not None:
            return False, witness
    return True, None


def _quadruple_orders(g):
    """Vertex orders starting at 0 passing the quadruple condition, in lexicographic order."""
    n = g.n
    prefix = [0]

    def extend(used):
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for t in range(1, n):
            if (used >> t) & 1:
                continue
            if any(_quadruple_violation(g, a, b, c, t) for a, b, c in combinations(prefix, 3)):
                continue
            prefix.append(t)
            yield from extend(used | (1 << t))
            prefix.pop()

    yield from extend(1)


def recognize_oriented_proper_cacd(g, cross_check=True):
    """
    Decide oriented proper CACD membership by the quadruple condition.

    Parameters:
    g (Digraph): Oriented digraph, at most ORIENTED_PROPER_MAX_N vertices
    cross_check (bool): Compare with recognize_proper_cacd and attach its representation

    Returns:
    Verdict: circular-order certificate or an exhaustion witness
    """
    if not is_oriented(g):
        raise NotOrientedError("recognize_oriented_proper_cacd needs an oriented digraph")
    if g.n > ORIENTED_PROPER_MAX_N:
        raise SizeBoundError("recognize_oriented_proper_cacd", g.n, ORIENTED_PROPER_MAX_N)

    sigma = next(_quadruple_orders(g), None)
    proper = recognize_proper_cacd(g) if cross_check else None
    if proper is not None and proper.accepted != (sigma is not None):
        raise CharacterizationMismatch(
            f"quadruple search {'accepts' if sigma else 'rejects'} {g} "
            f"but the proper recognizer {'accepts' if proper.accepted else 'rejects'} it"
        )

    if sigma is None:
        return Verdict.reject("oriented-proper", Witness("exhausted", detail={"anchor": 0}))
    representation = proper.certificate.representation if proper is not None else None
    return Verdict.accept(
        "oriented-proper",
        Certificate("circular-order", ordering=Ordering(sigma), representation=representation),
    )


def contains_complement_cycle(g, k):
    """Vertex map of an induced complement of the k-cycle in the underlying graph, or None."""
    if not 4 <= k <= g.n:
        raise PreconditionError("contains_complement_cycle", f"need 4 <= k <= {g.n}, got k={k}")
    return find_induced(underlying_graph(g), complement_cycle(k))


# ----------------------------------------------------------------------
# Round orientations
# ----------------------------------------------------------------------

def _is_transitive_tournament(g, vertices):
    sub = g.induced(vertices)
    if not predicates(sub).is_tournament:
        return False
    return sorted(sub.out_degree(v) for v in range(sub.n)) == list(range(sub.n))


def is_round_enumeration(g, order):
    """
    Check a circular order of an oriented digraph against the round definition.

    Every inset must be the block right before the vertex and every outset
    the block right after it (either may be empty); every edge v_i v_j must
    span a transitive tournament v_i, ..., v_j.

    Returns:
    tuple: (holds, witness dict or None)
    """
    order = list(order)
    n = len(order)
    if n != g.n or sorted(order) != list(range(n)):
        raise PreconditionError("is_round_enumeration", f"{order} is not an ordering of the vertices")
    if not is_oriented(g):
        return False, {"reason": "not oriented"}
    position = {v: i for i, v in enumerate(order)}

    for i, v in enumerate(order):
        after = {order[(i + k) % n] for k in range(1, g.out_degree(v) + 1)}
        before = {order[(i - k) % n] for k in range(1, g.in_degree(v) + 1)}
        if set(g.successors(v)) != after:
            return False, {"vertex": v, "reason": "outset is not the block after it"}
        if set(g.predecessors(v)) != before:
            return False, {"vertex": v, "reason": "inset is not the block before it"}

    for u, v in g.edges():
        i, j = position[u], position[v]
        segment = [order[(i + k) % n] for k in range((j - i) % n + 1)]
        if not _is_transitive_tournament(g, segment):
            return False, {"edge": [u, v], "reason": "segment is not a transitive tournament"}
    return True, None


def round_orientation_from_representation(rep):
    """
    Orient the underlying graph of a proper, oriented representation.

    Vertices are ordered by point position; v points to every u with p_u in
    [p_v, b_v] or p_v in [a_u, p_u].

    Returns:
    tuple: (Ordering by point position, oriented Digraph)
    """
    if not is_proper(rep):
        raise PreconditionError("round_orientation_from_representation", "representation is not proper")
    if not is_oriented(realize(rep)):
        raise PreconditionError("round_orientation_from_representation", "realized digraph is not oriented")

    n = rep.n
    rows = [0] * n
    for v in range(n):
        arc, p = rep.arcs[v], rep.points[v]
        ahead = CircularArc(p, arc.b)
        for u in range(n):
            if u == v:
                continue
            behind_u = CircularArc(rep.arcs[u].a, rep.points[u])
            if arc_contains(ahead, rep.points[u]) or arc_contains(behind_u, p):
                rows[v] |= 1 << u
    for v in range(n):
        for u in iter_bits(rows[v]):
            if (rows[u] >> v) & 1:
                raise ConstructionError(f"vertices {v} and {u} point at each other")
    return Ordering(tuple(rep.point_order())), Digraph(n, tuple(rows))


# ----------------------------------------------------------------------
# Classification
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class Classification:
    cacd: Verdict
    proper: Verdict
    oriented: bool
    oriented_proper: Optional[Verdict]
    tournament: Optional[Verdict]

    def to_dict(self):
        return {
            "cacd": self.cacd.accepted,
            "proper": self.proper.accepted,
            "oriented": self.oriented,
            "oriented_proper": None if self.oriented_proper is None else self.oriented_proper.accepted,
            "tournament_cacd": None if self.tournament is None else self.tournament.accepted,
            "verdicts": {
                "cacd": self.cacd.to_dict(),
                "proper": self.proper.to_dict(),
                "oriented_proper": self.oriented_proper.to_dict() if self.oriented_proper else None,
                "tournament": self.tournament.to_dict() if self.tournament else None,
            },
        }


def classify(g):
    flags = predicates(g)
    oriented_proper = recognize_oriented_proper_cacd(g) if flags.is_oriented else None
    tournament = None
    if flags.is_tournament and flags.is_connected:
        tournament = recognize_tournament_cacd(g)
    result = Classification(
        cacd=recognize_cacd(g),
        proper=recognize_proper_cacd(g),
        oriented=flags.is_oriented,
        oriented_proper=oriented_proper,
        tournament=tournament,
    )
    logger.info("classified %s: %s", g, {k: v for k, v in result.to_dict().items() if k != "verdicts"})
    return result

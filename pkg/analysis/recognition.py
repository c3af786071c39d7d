"""
Circular-arc catch digraph recognition
A digraph is a CACD iff the rows of its augmented adjacency matrix have the
circular-ones property under some common vertex ordering.
"""

import logging

from analysis.circular_ones import (
    StretchKind,
    classify_bits,
    circular_ones_order,
    enumerate_row_cop_orderings,
    has_circular_ones,
)
from config.settings import DESK_BOUND, TOURNAMENT_MAX_N
from core.binary_matrix import augmented_adjacency
from core.digraph import find_induced, predicates
from core.errors import (
    CharacterizationMismatch,
    ConstructionError,
    NotATournamentError,
    PreconditionError,
)
from core.representation import CatchRepresentation, CirclePos, CircularArc, verify
from core.verdict import Certificate, Verdict, Witness

logger = logging.getLogger(__name__)


def representation_from_ordering(g, order):
    """
    Read a catch representation off a row-COP vertex ordering.

    Vertex order[i] gets point i+1 and the arc spanned by its row's stretch
    of ones, with column indices used as positions on a circle of
    circumference n+1.

    Parameters:
    g (Digraph): The digraph
    order (Ordering): Vertex ordering applied to rows and columns of A*(g)

    Returns:
    CatchRepresentation: Representation realizing g
    """
    n = g.n
    matrix = augmented_adjacency(g).permute_rows(order).permute_columns(order)
    L = n + 1
    arcs = [None] * n
    points = [None] * n
    for i in range(n):
        v = order[i]
        stretch = classify_bits(matrix.row(i))
        if stretch.kind is StretchKind.TYPE1:
            a, b = stretch.i1, stretch.i2
        elif stretch.kind is StretchKind.TYPE2:
            a, b = stretch.i3, stretch.i4
        elif stretch.kind is StretchKind.FULL:
            a, b = 1, n
        else:
            raise PreconditionError(
                "representation_from_ordering",
                f"row of vertex {v} is not circularly consecutive under {order.to_list()}",
            )
        arcs[v] = CircularArc.of(a, b, L)
        points[v] = CirclePos(i + 1, L)
    return CatchRepresentation(L, arcs, points)


def is_cacd(g):
    """Decision only, through the polynomial circular-ones backend; no size bound."""
    masks = [mask | (1 << v) for v, mask in enumerate(g.out_masks)]
    return has_circular_ones(masks, g.n)


def recognize_cacd(g, budget=None):
    """
    Decide CACD membership with a verified certificate.

    Up to DESK_BOUND vertices the exhaustive ordering search runs; beyond it
    the ordering comes from the polynomial circular-ones backend.

    Parameters:
    g (Digraph): The digraph
    budget (int): Optional cap on ordering-search nodes

    Returns:
    Verdict: ordering + representation, or a rejection witness
    """
    if g.n > DESK_BOUND:
        return _recognize_polynomial(g)

    search = enumerate_row_cop_orderings(augmented_adjacency(g), budget)
    for order in search:
        return Verdict.accept("cacd", _certify(g, order))

    if search.truncated:
        return Verdict.reject("cacd", Witness("truncated", detail={"nodes": search.explored}))
    return Verdict.reject("cacd", Witness("exhausted", detail={"nodes": search.explored}))


def _certify(g, order):
    rep = representation_from_ordering(g, order)
    if not verify(rep, g):
        raise ConstructionError(f"ordering {order.to_list()} produced a representation that does not realize the input")
    return Certificate("representation", ordering=order, representation=rep)


def _recognize_polynomial(g):
    masks = [mask | (1 << v) for v, mask in enumerate(g.out_masks)]
    order = circular_ones_order(masks, g.n)
    if order is None:
        logger.info("no circular-ones ordering for %s", g)
        return Verdict.reject("cacd", Witness("no-circular-ones-order", detail={"backend": "polynomial"}))
    return Verdict.accept("cacd", _certify(g, order))


def recognize_tournament_cacd(g, catalog=None):
    """
    Decide CACD membership of a tournament by forbidden induced subdigraphs.

    The verdict is cross-checked against recognize_cacd; an accepted
    verdict carries that recognizer's certificate.
    """
    flags = predicates(g)
    if not flags.is_tournament:
        raise NotATournamentError("recognize_tournament_cacd needs a tournament")
    if not flags.is_connected:
        raise PreconditionError("recognize_tournament_cacd", "tournament is not connected")

    if catalog is None:
        from analysis.oracles import default_catalog
        # members larger than g cannot occur in it
        catalog = default_catalog(min(g.n, TOURNAMENT_MAX_N))

    direct = recognize_cacd(g)
    for member in catalog.members:
        phi = find_induced(g, member.digraph)
        if phi is None:
            continue
        if direct.accepted:
            raise CharacterizationMismatch(
                f"tournament contains {member.label} on {list(phi)} but recognize_cacd accepts it"
            )
        return Verdict.reject(
            "tournament",
            Witness("induced-subdigraph", vertices=phi,
                    detail={"pattern": member.label, "pattern_n": member.digraph.n}),
        )

    if not direct.accepted:
        raise CharacterizationMismatch("tournament avoids every catalog member but recognize_cacd rejects it")
    certificate = direct.certificate
    return Verdict.accept(
        "tournament",
        Certificate("forbidden-free", ordering=certificate.ordering,
                    representation=certificate.representation),
    )

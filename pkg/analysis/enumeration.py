"""
Small-instance generators
Tournaments and oriented digraphs up to isomorphism, labeled digraphs, and
seeded random catch representations
"""

import logging
from fractions import Fraction
from functools import lru_cache
from itertools import product

from config.settings import (
    LABELED_SWEEP_MAX_N,
    ORIENTED_SWEEP_MAX_N,
    TOURNAMENT_MAX_N,
)
from core.digraph import Digraph, canonical_form
from core.errors import PreconditionError, SizeBoundError
from core.representation import CatchRepresentation, CirclePos, CircularArc

logger = logging.getLogger(__name__)


def _extend(classes, k, patterns, keep=None):
    """
    One-vertex extensions of the (k-1)-vertex classes, deduplicated.

    `patterns` yields, for the new vertex k-1, tuples of per-old-vertex
    states: 0 no edge, 1 old->new, 2 new->old.
    """
    found = {}
    for g in classes:
        for states in patterns:
            rows = list(g.out_masks) + [0]
            for i, state in enumerate(states):
                if state == 1:
                    rows[i] |= 1 << (k - 1)
                elif state == 2:
                    rows[k - 1] |= 1 << i
            h = Digraph(k, tuple(rows))
            if keep is not None and not keep(h):
                continue
            found.setdefault(canonical_form(h), h)
    return [found[key] for key in sorted(found)]


@lru_cache(maxsize=None)
def _tournament_classes(n):
    if n == 1:
        return (Digraph(1, (0,)),)
    previous = _tournament_classes(n - 1)
    classes = _extend(previous, n, list(product((1, 2), repeat=n - 1)))
    logger.info("%d tournaments on %d vertices", len(classes), n)
    return tuple(classes)


def enumerate_tournaments(n):
    """
    One representative per isomorphism class of n-vertex tournaments.

    Parameters:
    n (int): 1..TOURNAMENT_MAX_N

    Returns:
    list: Digraphs ordered by canonical form
    """
    if n < 1:
        raise PreconditionError("enumerate_tournaments", f"need n >= 1, got {n}")
    if n > TOURNAMENT_MAX_N:
        raise SizeBoundError("enumerate_tournaments", n, TOURNAMENT_MAX_N)
    return list(_tournament_classes(n))


def enumerate_oriented_digraphs(n, keep=None):
    """
    Oriented digraphs up to isomorphism, optionally restricted by `keep`.

    `keep` must be hereditary (closed under induced subdigraphs), since
    classes failing it are not extended further.
    """
    if n < 1:
        raise PreconditionError("enumerate_oriented_digraphs", f"need n >= 1, got {n}")
    if n > ORIENTED_SWEEP_MAX_N:
        raise SizeBoundError("enumerate_oriented_digraphs", n, ORIENTED_SWEEP_MAX_N)
    classes = [Digraph(1, (0,))]
    if keep is not None:
        classes = [g for g in classes if keep(g)]
    for k in range(2, n + 1):
        classes = _extend(classes, k, list(product((0, 1, 2), repeat=k - 1)), keep)
        logger.info("%d oriented classes on %d vertices", len(classes), k)
    return classes


def enumerate_labeled_digraphs(n):
    """Every labeled loop-free digraph on n vertices, in mask order."""
    if n < 1:
        raise PreconditionError("enumerate_labeled_digraphs", f"need n >= 1, got {n}")
    if n > LABELED_SWEEP_MAX_N:
        raise SizeBoundError("enumerate_labeled_digraphs", n, LABELED_SWEEP_MAX_N)
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    for mask in range(1 << len(pairs)):
        rows = [0] * n
        for k, (u, v) in enumerate(pairs):
            if (mask >> k) & 1:
                rows[u] |= 1 << v
        yield Digraph(n, tuple(rows))


def random_representation(rng, n, proper=False):
    """
    Seeded random catch representation with half-integer endpoints.

    Points are distinct integers on a circle of circumference 4n. With
    `proper`, every arc has the same length, so none strictly contains another.

    Parameters:
    rng (numpy.random.Generator): Random source
    n (int): Vertex count
    proper (bool): Equal-length arcs

    Returns:
    CatchRepresentation: Valid representation
    """
    L = 4 * n
    points = [int(p) for p in rng.choice(L, size=n, replace=False)]
    span = int(rng.integers(0, 2 * L))
    arcs = []
    for p in points:
        if proper:
            back = int(rng.integers(0, span + 1))
            ahead = span - back
        else:
            back = int(rng.integers(0, L))
            ahead = int(rng.integers(0, L))
        a = (p - Fraction(back, 2)) % L
        b = (p + Fraction(ahead, 2)) % L
        arcs.append(CircularArc.of(a, b, L))
    return CatchRepresentation(L, arcs, [CirclePos(p, L) for p in points])

"""
Digraph model - dense bit-matrix directed graphs over 0-indexed vertices
Structural predicates, induced-subdigraph search, canonical forms, generators
"""

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components, shortest_path

from config.settings import CANONICAL_FORM_MAX_N
from core.errors import InputFormatError, PreconditionError, SizeBoundError


def iter_bits(mask):
    """Yield the indices of the set bits of `mask` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Digraph:
    """
    Directed graph on vertices 0..n-1.

    Row u of the bit matrix is stored as the integer `out_masks[u]`:
    bit v is set iff u->v is an edge.
    """

    n: int
    out_masks: tuple

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"a digraph needs at least one vertex, got n={self.n}")
        if len(self.out_masks) != self.n:
            raise ValueError(f"expected {self.n} adjacency rows, got {len(self.out_masks)}")
        full = (1 << self.n) - 1
        for v, mask in enumerate(self.out_masks):
            if mask & ~full:
                raise ValueError(f"row {v} references a vertex outside 0..{self.n - 1}")
            if (mask >> v) & 1:
                raise ValueError(f"self-loop at vertex {v}")

    # ------------------------------------------------------------------
    # Construction
    # ------------------------------------------------------------------

    @classmethod
    def from_edges(cls, n, edges):
        """
        Build a digraph from an edge list.

        Parameters:
        n (int): Vertex count
        edges (iterable): (u, v) pairs meaning u->v

        Returns:
        Digraph: The digraph; duplicates and self-loops are rejected
        """
        if not isinstance(n, int) or isinstance(n, bool) or n < 1:
            raise InputFormatError(f"vertex count must be a positive integer, got {n!r}")
        rows = [0] * n
        for edge in edges:
            try:
                u, v = edge
            except (TypeError, ValueError):
                raise InputFormatError(f"edge must be a pair, got {edge!r}") from None
            for x in (u, v):
                if not isinstance(x, int) or isinstance(x, bool) or not 0 <= x < n:
                    raise InputFormatError(f"edge endpoint {x!r} outside 0..{n - 1}")
            if u == v:
                raise InputFormatError(f"self-loop {u}->{v} is not allowed")
            if (rows[u] >> v) & 1:
                raise InputFormatError(f"duplicate edge {u}->{v}")
            rows[u] |= 1 << v
        return cls(n, tuple(rows))

    @classmethod
    def from_adjacency(cls, matrix):
        """Build a digraph from a square 0/1 matrix (diagonal must be zero)."""
        array = np.asarray(matrix, dtype=bool)
        if array.ndim != 2 or array.shape[0] != array.shape[1]:
            raise ValueError(f"adjacency must be square, got shape {array.shape}")
        rows = tuple(
            sum(1 << int(v) for v in np.flatnonzero(array[u])) for u in range(array.shape[0])
        )
        return cls(array.shape[0], rows)

    @classmethod
    def from_json_dict(cls, data):
        if not isinstance(data, dict) or "n" not in data or "edges" not in data:
            raise InputFormatError('digraph JSON needs the keys "n" and "edges"')
        if not isinstance(data["edges"], list):
            raise InputFormatError('"edges" must be a list of [u, v] pairs')
        return cls.from_edges(data["n"], data["edges"])

    def to_json_dict(self):
        return {"n": self.n, "edges": [list(e) for e in self.edges()]}

    # ------------------------------------------------------------------
    # Neighbourhoods
    # ------------------------------------------------------------------

    @cached_property
    def in_masks(self):
        rows = [0] * self.n
        for u, mask in enumerate(self.out_masks):
            for v in iter_bits(mask):
                rows[v] |= 1 << u
        return tuple(rows)

    @cached_property
    def adjacency(self):
        """Read-only numpy boolean adjacency matrix."""
        array = np.zeros((self.n, self.n), dtype=bool)
        for u, mask in enumerate(self.out_masks):
            array[u, list(iter_bits(mask))] = True
        array.setflags(write=False)
        return array

    def has_edge(self, u, v):
        return bool((self.out_masks[u] >> v) & 1)

    def successors(self, v):
        return list(iter_bits(self.out_masks[v]))

    def predecessors(self, v):
        return list(iter_bits(self.in_masks[v]))

    def out_degree(self, v):
        return self.out_masks[v].bit_count()

    def in_degree(self, v):
        return self.in_masks[v].bit_count()

    def edges(self):
        return [(u, v) for u in range(self.n) for v in iter_bits(self.out_masks[u])]

    def edge_count(self):
        return sum(mask.bit_count() for mask in self.out_masks)

    # ------------------------------------------------------------------
    # Derived digraphs
    # ------------------------------------------------------------------

    def induced(self, vertices):
        """Induced subdigraph on `vertices`, relabelled 0..k-1 in the given order."""
        vertices = list(vertices)
        rows = []
        for u in vertices:
            row = 0
            for i, v in enumerate(vertices):
                if (self.out_masks[u] >> v) & 1:
                    row |= 1 << i
            rows.append(row)
        return Digraph(len(vertices), tuple(rows))

    def relabel(self, perm):
        """Copy in which vertex v is renamed perm[v]."""
        rows = [0] * self.n
        for u, mask in enumerate(self.out_masks):
            for v in iter_bits(mask):
                rows[perm[u]] |= 1 << perm[v]
        return Digraph(self.n, tuple(rows))

    def with_edge_flipped(self, u, v):
        """Copy with the u->v entry toggled."""
        rows = list(self.out_masks)
        rows[u] ^= 1 << v
        return Digraph(self.n, tuple(rows))

    def __str__(self):
        return f"Digraph(n={self.n}, edges={self.edges()})"


@dataclass(frozen=True)
class DigraphPredicates:
    is_oriented: bool
    is_tournament: bool
    is_unilateral: bool
    is_connected: bool

    def to_dict(self):
        return {
            "oriented": self.is_oriented,
            "tournament": self.is_tournament,
            "unilateral": self.is_unilateral,
            "connected": self.is_connected,
        }


def underlying_graph(g):
    """Symmetric digraph with u-v adjacent iff u->v or v->u in g."""
    return Digraph(g.n, tuple(o | i for o, i in zip(g.out_masks, g.in_masks)))


def is_oriented(g):
    return all(not (o & i) for o, i in zip(g.out_masks, g.in_masks))


def is_symmetric(g):
    return g.out_masks == g.in_masks


def _sparse(g):
    return csr_matrix(g.adjacency.astype(np.int8))


def is_connected(g):
    count, _ = connected_components(_sparse(g), directed=True, connection='weak')
    return count == 1


def weak_components(g):
    """Vertex lists of the connected components of the underlying graph."""
    _, labels = connected_components(_sparse(g), directed=True, connection='weak')
    components = {}
    for v, label in enumerate(labels):
        components.setdefault(int(label), []).append(v)
    return sorted(components.values())


def is_unilateral(g):
    if g.n == 1:
        return True
    distances = shortest_path(_sparse(g), method='D', unweighted=True)
    reach = np.isfinite(distances)
    return bool(np.all(reach | reach.T))


def predicates(g):
    oriented = is_oriented(g)
    full = (1 << g.n) - 1
    complete = all((o | i | (1 << v)) == full for v, (o, i) in enumerate(zip(g.out_masks, g.in_masks)))
    return DigraphPredicates(
        is_oriented=oriented,
        is_tournament=oriented and complete,
        is_unilateral=is_unilateral(g),
        is_connected=is_connected(g),
    )


def find_induced(host, pattern):
    """
    Search for an induced copy of `pattern` inside `host`.

    Parameters:
    host (Digraph): Digraph searched
    pattern (Digraph): Digraph looked for

    Returns:
    tuple or None: phi with phi[u] the host vertex of pattern vertex u
    """
    if pattern.n > host.n:
        return None

    # Most constrained pattern vertices first, preferring ones adjacent to those already placed.
    remaining = set(range(pattern.n))
    order = []
    placed_mask = 0
    while remaining:
        def rank(u):
            touches = ((pattern.out_masks[u] | pattern.in_masks[u]) & placed_mask) != 0
            return (touches, pattern.out_degree(u) + pattern.in_degree(u), -u)
        u = max(remaining, key=rank)
        order.append(u)
        remaining.discard(u)
        placed_mask |= 1 << u

    candidates = []
    for u in order:
        out_need, in_need = pattern.out_degree(u), pattern.in_degree(u)
        candidates.append([
            h for h in range(host.n)
            if host.out_degree(h) >= out_need and host.in_degree(h) >= in_need
        ])

    phi = [None] * pattern.n
    used = 0

    def extend(depth):
        nonlocal used
        if depth == len(order):
            return True
        u = order[depth]
        for h in candidates[depth]:
            if (used >> h) & 1:
                continue
            consistent = True
            for w in order[:depth]:
                hw = phi[w]
                if ((host.out_masks[h] >> hw) & 1) != ((pattern.out_masks[u] >> w) & 1):
                    consistent = False
                    break
                if ((host.out_masks[hw] >> h) & 1) != ((pattern.out_masks[w] >> u) & 1):
                    consistent = False
                    break
            if not consistent:
                continue
            phi[u] = h
            used |= 1 << h
            if extend(depth + 1):
                return True
            used &= ~(1 << h)
            phi[u] = None
        return False

    if extend(0):
        return tuple(phi)
    return None


def _refined_colors(g):
    """Isomorphism-invariant vertex colouring by iterated degree refinement."""
    signatures = [(g.out_degree(v), g.in_degree(v)) for v in range(g.n)]
    palette = sorted(set(signatures))
    colors = [palette.index(s) for s in signatures]
    while True:
        signatures = [
            (
                colors[v],
                tuple(sorted(colors[w] for w in iter_bits(g.out_masks[v]))),
                tuple(sorted(colors[w] for w in iter_bits(g.in_masks[v]))),
            )
            for v in range(g.n)
        ]
        palette = sorted(set(signatures))
        refined = [palette.index(s) for s in signatures]
        if len(palette) == len(set(colors)):
            return refined
        colors = refined


def canonical_form(g):
    """
    Canonical byte string: equal for two digraphs iff they are isomorphic.

    The string is the lexicographically least pair-code sequence over all
    vertex orders that respect the refined colour classes.
    """
    if g.n > CANONICAL_FORM_MAX_N:
        raise SizeBoundError("canonical_form", g.n, CANONICAL_FORM_MAX_N)

    colors = _refined_colors(g)
    slot_colors = sorted(colors)
    out = g.out_masks
    best = None
    prefix = []

    def extend(codes, used):
        nonlocal best
        k = len(prefix)
        if k == g.n:
            if best is None or codes < best:
                best = list(codes)
            return
        for v in range(g.n):
            if (used >> v) & 1 or colors[v] != slot_colors[k]:
                continue
            step = [((out[p] >> v) & 1) * 2 + ((out[v] >> p) & 1) for p in prefix]
            candidate = codes + step
            if best is not None and candidate > best[:len(candidate)]:
                continue
            prefix.append(v)
            extend(candidate, used | (1 << v))
            prefix.pop()

    extend([], 0)
    return bytes([g.n]) + bytes(best)


# ----------------------------------------------------------------------
# Generators
# ----------------------------------------------------------------------

def empty_digraph(n):
    return Digraph(n, (0,) * n)


def directed_path(n):
    return Digraph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def directed_cycle(n):
    if n < 3:
        raise PreconditionError("directed_cycle", f"needs n >= 3, got {n}")
    return Digraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def transitive_tournament(n):
    return Digraph.from_edges(n, [(i, j) for i, j in combinations(range(n), 2)])


def complete_symmetric(n):
    full = (1 << n) - 1
    return Digraph(n, tuple(full & ~(1 << v) for v in range(n)))


def tournament_from_bits(n, bits):
    """Tournament whose k-th pair (i<j, lexicographic) is i->j iff bit k of `bits` is set."""
    edges = []
    for k, (i, j) in enumerate(combinations(range(n), 2)):
        edges.append((i, j) if (bits >> k) & 1 else (j, i))
    return Digraph.from_edges(n, edges)


def orient(graph, bits):
    """
    Orientation of the symmetric digraph `graph`.

    Its k-th undirected edge {i<j} (lexicographic) becomes i->j when bit k
    of `bits` is set and j->i otherwise.
    """
    edges = []
    pairs = [(i, j) for i, j in combinations(range(graph.n), 2) if graph.has_edge(i, j)]
    for k, (i, j) in enumerate(pairs):
        edges.append((i, j) if (bits >> k) & 1 else (j, i))
    return Digraph.from_edges(graph.n, edges)


def undirected_edges(graph):
    return [(i, j) for i, j in combinations(range(graph.n), 2) if graph.has_edge(i, j)]


def complement_cycle(n):
    """Symmetric digraph on n vertices; i and j adjacent iff not consecutive mod n."""
    if n < 4:
        raise PreconditionError("complement_cycle", f"needs n >= 4, got {n}")
    edges = []
    for i, j in combinations(range(n), 2):
        if (j - i) % n not in (1, n - 1):
            edges.extend([(i, j), (j, i)])
    return Digraph.from_edges(n, edges)


def undirected_cycle(n):
    if n < 3:
        raise PreconditionError("undirected_cycle", f"needs n >= 3, got {n}")
    edges = []
    for i in range(n):
        j = (i + 1) % n
        edges.extend([(i, j), (j, i)])
    return Digraph.from_edges(n, edges)

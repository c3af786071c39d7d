"""
Circular-ones property (COP) on binary matrices
Row classification, ordering search and the polynomial Tucker-reduction test
"""

import logging
from collections import deque
from dataclasses import dataclass
from enum import Enum
from itertools import permutations
from typing import Optional

from core.errors import ConstructionError

logger = logging.getLogger(__name__)


class StretchKind(Enum):
    TYPE1 = "type1"
    TYPE2 = "type2"
    FULL = "full"
    ZERO = "zero"
    NOT_CIRCULAR = "not-circular"


@dataclass(frozen=True)
class RowStretch:
    """
    Classification of one row; column indices are 1-based.

    Type1 rows have their ones exactly in [i1, i2]; Type2 rows wrap and have
    their ones exactly in [i3, cols] and [1, i4].
    """

    kind: StretchKind
    i1: Optional[int] = None
    i2: Optional[int] = None
    i3: Optional[int] = None
    i4: Optional[int] = None

    def __post_init__(self):
        if self.kind is StretchKind.TYPE1:
            if self.i1 is None or self.i2 is None or not 1 <= self.i1 <= self.i2:
                raise ValueError(f"invalid Type1 stretch [{self.i1}, {self.i2}]")
        elif self.kind is StretchKind.TYPE2:
            if self.i3 is None or self.i4 is None or not 1 <= self.i4 < self.i3:
                raise ValueError(f"invalid Type2 stretch [{self.i3}, {self.i4}]")

    @property
    def is_circular(self):
        return self.kind is not StretchKind.NOT_CIRCULAR

    @property
    def is_nontrivial(self):
        return self.kind in (StretchKind.TYPE1, StretchKind.TYPE2)

    def columns(self, cols):
        """The 1-based columns holding ones."""
        if self.kind is StretchKind.TYPE1:
            return set(range(self.i1, self.i2 + 1))
        if self.kind is StretchKind.TYPE2:
            return set(range(self.i3, cols + 1)) | set(range(1, self.i4 + 1))
        if self.kind is StretchKind.FULL:
            return set(range(1, cols + 1))
        if self.kind is StretchKind.ZERO:
            return set()
        raise ValueError("a non-circular row has no stretch")

    def to_dict(self):
        data = {"kind": self.kind.value}
        for name in ("i1", "i2", "i3", "i4"):
            value = getattr(self, name)
            if value is not None:
                data[name] = value
        return data


NOT_CIRCULAR = RowStretch(StretchKind.NOT_CIRCULAR)


@dataclass(frozen=True)
class Ordering:
    """A permutation of 0..k-1; position i holds the original index perm[i]."""

    perm: tuple

    def __post_init__(self):
        perm = tuple(int(x) for x in self.perm)
        if sorted(perm) != list(range(len(perm))):
            raise ValueError(f"not a permutation: {perm}")
        object.__setattr__(self, "perm", perm)

    @classmethod
    def identity(cls, k):
        return cls(tuple(range(k)))

    def __len__(self):
        return len(self.perm)

    def __iter__(self):
        return iter(self.perm)

    def __getitem__(self, i):
        return self.perm[i]

    def rotated(self, k):
        k %= len(self.perm)
        return Ordering(self.perm[k:] + self.perm[:k])

    def reversed(self):
        return Ordering(tuple(reversed(self.perm)))

    def inverse(self):
        inv = [0] * len(self.perm)
        for position, index in enumerate(self.perm):
            inv[index] = position
        return Ordering(tuple(inv))

    def anchored(self):
        """Rotation that starts with index 0."""
        return self.rotated(self.perm.index(0))

    def to_list(self):
        return list(self.perm)


def classify_bits(bits):
    """Classify a 0/1 sequence as a circular stretch of ones."""
    bits = [bool(x) for x in bits]
    k = len(bits)
    ones = [j for j, x in enumerate(bits) if x]
    if not ones:
        return RowStretch(StretchKind.ZERO)
    if len(ones) == k:
        return RowStretch(StretchKind.FULL)
    if ones[-1] - ones[0] + 1 == len(ones):
        return RowStretch(StretchKind.TYPE1, i1=ones[0] + 1, i2=ones[-1] + 1)
    zeros = [j for j, x in enumerate(bits) if not x]
    if bits[0] and bits[-1] and zeros[-1] - zeros[0] + 1 == len(zeros):
        return RowStretch(StretchKind.TYPE2, i3=zeros[-1] + 2, i4=zeros[0])
    return NOT_CIRCULAR


def classify_row(m, row):
    if not 0 <= row < m.rows:
        raise IndexError(f"row {row} outside 0..{m.rows - 1}")
    return classify_bits(m.row(row))


def has_row_cop(m, col_order=None):
    """True iff every row of m, columns taken in `col_order`, is circularly consecutive."""
    permuted = m if col_order is None else m.permute_columns(col_order)
    return all(classify_bits(permuted.row(i)).is_circular for i in range(permuted.rows))


def is_circular_run(mask, k):
    """True iff the set bits of `mask` form one circular run on k positions (or none/all)."""
    full = (1 << k) - 1
    mask &= full
    if mask in (0, full):
        return True
    # A single circular run has exactly one 0->1 boundary going around the circle.
    rotated = ((mask << 1) | (mask >> (k - 1))) & full
    starts = mask & ~rotated
    return starts.bit_count() == 1


class OrderingSearch:
    """
    Exhaustive enumeration of the column orderings giving row-COP.

    Orderings are reported up to rotation (column 0 is always first) in
    lexicographic order. `budget` caps the number of search nodes; when it
    runs out the iteration stops early and `truncated` becomes True.
    """

    def __init__(self, matrix, budget=None):
        self.matrix = matrix
        self.budget = budget
        self.truncated = False
        self.explored = 0

    def __iter__(self):
        m = self.matrix
        self.truncated = False
        self.explored = 0
        columns = [
            sum(1 << i for i in range(m.rows) if m.bits[i, c]) for c in range(m.cols)
        ]
        perm = [0]

        def dfs(used, last, two_runs, three_runs):
            if len(perm) == m.cols:
                yield Ordering(tuple(perm))
                return
            for c in range(1, m.cols):
                if (used >> c) & 1:
                    continue
                if self.budget is not None and self.explored >= self.budget:
                    self.truncated = True
                    return
                self.explored += 1
                changed = columns[c] ^ last
                # a fourth run in any row can never close up circularly
                if three_runs & changed:
                    continue
                perm.append(c)
                yield from dfs(used | (1 << c), columns[c], two_runs | changed,
                               three_runs | (two_runs & changed))
                perm.pop()
                if self.truncated:
                    return

        yield from dfs(1, columns[0], 0, 0)
        if self.truncated:
            logger.warning("ordering search truncated after %d nodes", self.explored)


def enumerate_row_cop_orderings(m, budget=None):
    return OrderingSearch(m, budget)


def find_row_cop_ordering(m):
    return next(iter(OrderingSearch(m)), None)


def brute_force_row_cop_ordering(m):
    """Unpruned search over all m.cols! column orderings."""
    for perm in permutations(range(m.cols)):
        if has_row_cop(m, perm):
            return Ordering(perm)
    return None


# ----------------------------------------------------------------------
# Polynomial backend
# ----------------------------------------------------------------------

def _overlaps(a, b):
    return bool(a & b) and bool(a & ~b) and bool(b & ~a)


def _split(first, second):
    return [part for part in (first, second) if part]


def _place(blocks, union, row):
    """Refine the ordered column partition so that `row` becomes consecutive."""
    new = row & ~union
    touched = [i for i, block in enumerate(blocks) if block & row]
    lo, hi = touched[0], touched[-1]
    for i in range(lo + 1, hi):
        if blocks[i] & ~row:
            return None

    if not new:
        if lo == hi:
            # the row overlaps a placed row, so it cannot sit inside one class
            raise AssertionError("overlap order violated")
        left, right = blocks[lo], blocks[hi]
        return (blocks[:lo] + _split(left & ~row, left & row) + blocks[lo + 1:hi]
                + _split(right & row, right & ~row) + blocks[hi + 1:])

    last = len(blocks) - 1
    right_open = hi == last and all(not (blocks[i] & ~row) for i in range(lo + 1, hi + 1))
    left_open = lo == 0 and all(not (blocks[i] & ~row) for i in range(lo, hi))
    if right_open:
        left = blocks[lo]
        return blocks[:lo] + _split(left & ~row, left & row) + blocks[lo + 1:] + [new]
    if left_open:
        right = blocks[hi]
        return [new] + blocks[:hi] + _split(right & row, right & ~row) + blocks[hi + 1:]
    return None


def _overlap_components(masks, cols):
    """Nontrivial distinct rows grouped into connected components of the overlap relation."""
    full = (1 << cols) - 1
    family = sorted({mask & full for mask in masks
                     if (mask & full).bit_count() >= 2 and (mask & full) != full})
    seen = set()
    components = []
    for start in family:
        if start in seen:
            continue
        seen.add(start)
        queue = deque([start])
        component = []
        while queue:
            row = queue.popleft()
            component.append(row)
            for other in family:
                if other not in seen and _overlaps(row, other):
                    seen.add(other)
                    queue.append(other)
        components.append(component)
    return components


def _refine(component):
    """Ordered column blocks making every row of one overlap component consecutive, or None."""
    blocks = [component[0]]
    union = component[0]
    for row in component[1:]:
        blocks = _place(blocks, union, row)
        if blocks is None:
            return None
        union |= row
    return blocks


def has_consecutive_ones(masks, cols):
    """
    Consecutive-ones test on integer row masks.

    Each overlap component is arranged by partition refinement, adding rows
    in an order where every new row overlaps an earlier one; the matrix has
    the property iff every component does.
    """
    return all(_refine(component) is not None for component in _overlap_components(masks, cols))


def consecutive_ones_order(masks, cols):
    """
    Column order making every row consecutive, or None.

    Components are taken by decreasing span. A component whose span meets a
    larger one lies inside a single block of it, so the arrangement is a
    tree of blocks; columns in no row go last.

    Parameters:
    masks (list): Integer row masks
    cols (int): Column count

    Returns:
    Ordering: Linear column order, or None when no order exists
    """
    arranged = []
    for component in _overlap_components(masks, cols):
        blocks = _refine(component)
        if blocks is None:
            return None
        union = 0
        for row in component:
            union |= row
        arranged.append((union, blocks, len(component)))
    arranged.sort(key=lambda item: (-item[0].bit_count(), -item[2]))

    children = {}
    slots = []
    spans = set()
    for idx, (union, blocks, _) in enumerate(arranged):
        # a single row spanning a larger component is consecutive once that component is
        if union in spans:
            continue
        spans.add(union)
        parent = next((key for mask, key in reversed(slots) if not union & ~mask), None)
        children.setdefault(parent, []).append(idx)
        slots.extend((block, (idx, j)) for j, block in enumerate(blocks))

    def emit(key, mask):
        order = []
        covered = 0
        for idx in children.get(key, []):
            union, blocks, _ = arranged[idx]
            for j, block in enumerate(blocks):
                order.extend(emit((idx, j), block))
            covered |= union
        order.extend(c for c in range(cols) if (mask & ~covered) >> c & 1)
        return order

    order = emit(None, (1 << cols) - 1)
    full = (1 << cols) - 1
    position = {c: i for i, c in enumerate(order)}
    for mask in masks:
        places = [position[c] for c in range(cols) if (mask & full) >> c & 1]
        if places and max(places) - min(places) + 1 != len(places):
            raise ConstructionError(f"block tree left row {mask:b} split")
    return Ordering(tuple(order))


def has_circular_ones(masks, cols, reference=0):
    """Tucker's reduction: complement rows with a one in `reference`, then test consecutive ones."""
    full = (1 << cols) - 1
    derived = [(full & ~mask) if (mask >> reference) & 1 else mask for mask in masks]
    return has_consecutive_ones(derived, cols)


def circular_ones_order(masks, cols, reference=0):
    """
    Column order under which every row is circularly consecutive, or None.

    A consecutive order of the complemented rows serves directly: the
    complement of a linear run is a circular run.
    """
    full = (1 << cols) - 1
    derived = [(full & ~mask) if (mask >> reference) & 1 else mask for mask in masks]
    return consecutive_ones_order(derived, cols)


def has_row_cop_polynomial(m):
    return has_circular_ones(m.row_masks(), m.cols)


def find_row_cop_ordering_polynomial(m):
    return circular_ones_order(m.row_masks(), m.cols)

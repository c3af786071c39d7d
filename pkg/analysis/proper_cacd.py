"""
Proper circular-arc catch digraphs
Monotone circular ordering, the matrix conditions, and the constructive
pipeline B -> D -> M (full rows inserted) -> stairs -> arcs -> points
"""

import logging
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations
from typing import Optional

from analysis.circular_ones import (
    RowStretch,
    StretchKind,
    classify_bits,
    enumerate_row_cop_orderings,
    find_row_cop_ordering,
    has_row_cop,
    is_circular_run,
)
from config.settings import DESK_BOUND
from core.binary_matrix import BinaryMatrix, augmented_adjacency
from core.errors import (
    CharacterizationMismatch,
    ConstructionError,
    InsertionError,
    PreconditionError,
    SizeBoundError,
)
from core.representation import (
    CatchRepresentation,
    CirclePos,
    CircularArc,
    arc_contains,
    arcs_are_proper,
    is_proper,
    verify,
)
from core.verdict import Certificate, Verdict, Witness
from utils.helpers import format_rational

logger = logging.getLogger(__name__)

TYPE1, TYPE2, FULL, ZERO = StretchKind.TYPE1, StretchKind.TYPE2, StretchKind.FULL, StretchKind.ZERO


# ----------------------------------------------------------------------
# Types
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class LambdaMu:
    """
    Per-row (lambda, mu) profile.

    `stretches` holds each row's effective stretch: full rows are resolved
    to the Type1 [1, n] or Type2 [lambda, lambda-1] reading they inherit.
    """

    lam: tuple
    mu: tuple
    stretches: tuple

    def pairs(self):
        return list(zip(self.lam, self.mu))

    def to_dict(self):
        return {"lambda": list(self.lam), "mu": list(self.mu),
                "effective": [s.to_dict() for s in self.stretches]}


@dataclass(frozen=True)
class StairNumbering:
    l: tuple
    r: tuple

    def to_dict(self):
        return {"l": list(self.l), "r": list(self.r)}


@dataclass(frozen=True)
class ArcIndices:
    """s, s' and k per row (1-based row numbers folded in); None where undefined."""

    s: tuple
    s_prime: tuple
    k: tuple

    def to_dict(self):
        return {"s": list(self.s), "s_prime": list(self.s_prime), "k": list(self.k)}


@dataclass(frozen=True)
class RowBlocks:
    """Rows of B (by index) split into the sorted blocks D1, D2 and the full rows."""

    source: BinaryMatrix
    stretches: tuple
    d1: tuple
    d2: tuple
    fulls: tuple
    s1: tuple
    s2: tuple
    s3: tuple

    @property
    def d(self):
        return self.d1 + self.d2

    @property
    def landmarks(self):
        return {
            "i": self.s1[0] if self.s1 else None,
            "i_prime": self.s1[-1] if self.s1 else None,
            "j": self.s2[0] if self.s2 else None,
            "j_prime": self.s2[-1] if self.s2 else None,
            "k": self.s3[-1] if self.s3 else None,
            "m": self.d2[0] if self.d2 else None,
        }


@dataclass(frozen=True)
class ConditionReport:
    cond2: bool
    cond3: bool
    cond2_witness: Optional[tuple] = None
    cond3_witness: Optional[tuple] = None

    @property
    def ok(self):
        return self.cond2 and self.cond3

    def to_dict(self):
        return {
            "cond2": self.cond2,
            "cond2_witness": list(self.cond2_witness) if self.cond2_witness else None,
            "cond3": self.cond3,
            "cond3_witness": list(self.cond3_witness) if self.cond3_witness else None,
        }


@dataclass(frozen=True)
class MonotoneMatrix:
    """M together with the source-row index of each of its rows."""

    matrix: BinaryMatrix
    rows: tuple
    placement: str


@dataclass(frozen=True)
class MatrixPattern:
    name: str
    rows: tuple
    cols: tuple

    def describe(self):
        return f"{self.name} at rows {list(self.rows)}, columns {list(self.cols)}"


@dataclass(frozen=True)
class ProperTrace:
    column_vertices: tuple
    d_vertices: tuple
    m_vertices: tuple
    placement: str
    lambda_mu: LambdaMu
    stairs: StairNumbering
    indices: ArcIndices
    points: tuple

    def to_dict(self):
        return {
            "column_order": list(self.column_vertices),
            "D": list(self.d_vertices),
            "M": list(self.m_vertices),
            "placement": self.placement,
            "lambda_mu": self.lambda_mu.to_dict(),
            "stairs": self.stairs.to_dict(),
            "arc_indices": self.indices.to_dict(),
            "points": [format_rational(p) for p in self.points],
        }


FORBIDDEN_PATTERNS = {
    "F1": BinaryMatrix.from_rows(["100", "010", "001", "111"]),
    "F2": BinaryMatrix.from_rows(["1100", "0110", "0011", "1001", "1111"]),
    "F3": BinaryMatrix.from_rows(["11100", "01110", "00111", "10011", "11001", "11111"]),
}


# ----------------------------------------------------------------------
# Monotone circular ordering
# ----------------------------------------------------------------------

def compute_lambda_mu(m):
    """
    (lambda, mu) for every row of m, columns in identity order.

    Type1: (i1, i2); Type2: (i3, i4 + n). A full row copies lambda from the
    row above it; it reads as Type1 [1, n] when that row starts in column 1
    (or when it is the first row), otherwise as Type2 with mu = lambda - 1 + n.
    """
    n = m.cols
    lam, mu, effective = [], [], []
    for i in range(m.rows):
        stretch = classify_bits(m.row(i))
        if stretch.kind is ZERO:
            raise PreconditionError("compute_lambda_mu", f"row {i} is a zero row")
        if not stretch.is_circular:
            raise PreconditionError("compute_lambda_mu", f"row {i} is not circularly consecutive")
        if stretch.kind is TYPE1:
            lam.append(stretch.i1)
            mu.append(stretch.i2)
        elif stretch.kind is TYPE2:
            lam.append(stretch.i3)
            mu.append(stretch.i4 + n)
        elif i == 0:
            stretch = RowStretch(TYPE1, i1=1, i2=n)
            lam.append(1)
            mu.append(n)
        elif m.is_full_row(i - 1):
            stretch = effective[-1]
            lam.append(lam[-1])
            mu.append(mu[-1])
        else:
            above = effective[-1]
            if above.kind is TYPE1 and above.i1 == 1:
                stretch = RowStretch(TYPE1, i1=1, i2=n)
                lam.append(1)
                mu.append(n)
            else:
                start = lam[-1]
                stretch = RowStretch(TYPE2, i3=start, i4=start - 1)
                lam.append(start)
                mu.append(start - 1 + n)
        effective.append(stretch)
    return LambdaMu(tuple(lam), tuple(mu), tuple(effective))


def _non_decreasing(values):
    return all(a <= b for a, b in zip(values, values[1:]))


def is_monotone_circular_ordering(m):
    if not has_row_cop(m) or not has_row_cop(m.transpose()):
        return False
    if any(m.is_zero_row(i) for i in range(m.rows)):
        return False
    profile = compute_lambda_mu(m)
    return _non_decreasing(profile.lam) and _non_decreasing(profile.mu)


# ----------------------------------------------------------------------
# Conditions on B
# ----------------------------------------------------------------------

def _union_complement_is_circular(s, t, n):
    """Arithmetic test that the complement of two nontrivial stretches is one circular run."""
    if s.kind is TYPE2 and t.kind is TYPE2:
        return True
    if s.kind is TYPE1 and t.kind is TYPE1:
        if s.i1 > t.i1:
            s, t = t, s
        return t.i1 - s.i2 <= 1 or (s.i1 == 1 and t.i2 == n)
    if s.kind is TYPE1:
        s, t = t, s
    return t.i1 - s.i4 <= 1 or s.i3 - t.i2 <= 1


def check_conditions(b):
    """
    Conditions on the transformed matrix B.

    cond2: for all rows r != s, r - s is circularly consecutive.
    cond3: for a full row r and nontrivial rows s, t, r - s - t is
    circularly consecutive; evaluated arithmetically and by direct set
    computation, which must agree.
    """
    n = b.cols
    stretches = [classify_bits(b.row(i)) for i in range(b.rows)]
    for i, stretch in enumerate(stretches):
        if not stretch.is_circular:
            raise PreconditionError("check_conditions", f"row {i} is not circularly consecutive")
    masks = b.row_masks()
    full = (1 << n) - 1

    cond2_witness = None
    for r in range(b.rows):
        for s in range(b.rows):
            if r != s and not is_circular_run(masks[r] & ~masks[s], n):
                cond2_witness = (r, s)
                break
        if cond2_witness:
            break

    cond3_witness = None
    full_rows = [i for i, st in enumerate(stretches) if st.kind is FULL]
    nontrivial = [i for i, st in enumerate(stretches) if st.is_nontrivial]
    if full_rows:
        r = full_rows[0]
        for s, t in combinations(nontrivial, 2):
            direct = is_circular_run(full & ~(masks[s] | masks[t]), n)
            arithmetic = _union_complement_is_circular(stretches[s], stretches[t], n)
            if direct != arithmetic:
                raise CharacterizationMismatch(
                    f"rows {s}, {t}: arithmetic test says {arithmetic}, set difference says {direct}"
                )
            if not direct:
                cond3_witness = (r, s, t)
                break

    return ConditionReport(
        cond2=cond2_witness is None,
        cond3=cond3_witness is None,
        cond2_witness=cond2_witness,
        cond3_witness=cond3_witness,
    )


# ----------------------------------------------------------------------
# Matrix D and full-row insertion
# ----------------------------------------------------------------------

def build_D(b):
    n = b.cols
    stretches = tuple(classify_bits(b.row(i)) for i in range(b.rows))
    for i, stretch in enumerate(stretches):
        if not stretch.is_circular:
            raise PreconditionError("build_D", f"row {i} is not circularly consecutive")
        if stretch.kind is ZERO:
            raise PreconditionError("build_D", f"row {i} is a zero row")

    d1 = tuple(sorted((i for i, st in enumerate(stretches) if st.kind is TYPE1),
                      key=lambda i: (stretches[i].i1, stretches[i].i2, i)))
    d2 = tuple(sorted((i for i, st in enumerate(stretches) if st.kind is TYPE2),
                      key=lambda i: (stretches[i].i3, stretches[i].i4, i)))
    fulls = tuple(i for i, st in enumerate(stretches) if st.kind is FULL)

    blocks = RowBlocks(
        source=b,
        stretches=stretches,
        d1=d1,
        d2=d2,
        fulls=fulls,
        s1=tuple(i for i in d1 if stretches[i].i1 == 1),
        s2=tuple(i for i in d1 if stretches[i].i1 > 1 and stretches[i].i2 < n),
        s3=tuple(i for i in d1 if stretches[i].i2 == n),
    )
    if blocks.d and not has_row_cop(b.permute_rows(blocks.d).transpose()):
        raise ConstructionError(f"D (rows {list(blocks.d)}) lacks circular ones along columns")
    return blocks


def _full_row_position(blocks):
    """Index in D before which the block of full rows goes, with the case taken."""
    st = blocks.stretches
    d = blocks.d
    d1, d2, s1, s2, s3 = blocks.d1, blocks.d2, blocks.s1, blocks.s2, blocks.s3
    end = len(d)

    def contradiction(detail):
        return InsertionError(f"full-row insertion: {detail}", find_forbidden_pattern(blocks.source))

    if not d2:
        if not s1 or not s3:
            return end, "no type-2 rows; S1 or S3 empty: end"
        if not s2:
            return d.index(s1[-1]) + 1, "no type-2 rows; S2 empty: after i'"
        if st[s3[-1]].i1 <= st[s1[0]].i2 + 1:
            return end, "no type-2 rows; k1 <= i2 + 1: end"
        raise contradiction("k1 > i2 + 1 with S1, S2, S3 nonempty")

    if not s1 and not s2:
        return end, "S1 and S2 empty: end"
    if not s2:
        return d.index(s1[-1]) + 1, "S2 empty: after i'"

    # S2 nonempty: anchor is the last type-1 row (j' or k), reference the first (i or j)
    anchor, reference, m = d1[-1], d1[0], d2[0]
    start = st[anchor].i1
    if start - st[m].i4 <= 1:
        return len(d1), "before m"
    if s1 and s3 and start > st[reference].i2 + 1:
        raise contradiction("k1 > i2 + 1 with S1, S2, S3 nonempty")
    limit = st[reference].i2 + 1
    for offset, row in enumerate(d2):
        if st[row].i3 > limit:
            if start - st[row].i4 > 1:
                raise contradiction(f"no room before row {row}")
            return len(d1) + offset, "before m'"
    return end, "every m' starts by i2 + 1: end"


def insert_full_rows(blocks):
    """
    Assemble M: D with all full rows inserted as one consecutive block.

    Returns:
    MonotoneMatrix: M and its source-row indices
    """
    d = list(blocks.d)
    fulls = list(blocks.fulls)
    if not fulls:
        order, placement = d, "no full rows"
    elif not d:
        order, placement = fulls, "all rows full"
    else:
        position, placement = _full_row_position(blocks)
        order = d[:position] + fulls + d[position:]

    m = blocks.source.permute_rows(order)
    if not is_monotone_circular_ordering(m):
        raise InsertionError(
            f"M built by '{placement}' has no monotone circular ordering",
            find_forbidden_pattern(m),
        )
    return MonotoneMatrix(m, tuple(order), placement)


def find_forbidden_pattern(m):
    """Locate F1, F2 or F3 as a submatrix of m (rows and columns in any order)."""
    for name, pattern in FORBIDDEN_PATTERNS.items():
        rows, cols = pattern.shape
        if rows > m.rows or cols > m.cols:
            continue
        wanted = [tuple(bool(x) for x in pattern.row(i)) for i in range(rows)]
        for chosen in permutations(range(m.cols), cols):
            found = {}
            for i in range(m.rows):
                found.setdefault(tuple(bool(m.bits[i, c]) for c in chosen), i)
            if all(key in found for key in wanted):
                return MatrixPattern(name, tuple(found[key] for key in wanted), chosen)
    return None


# ----------------------------------------------------------------------
# Stairs, arcs and points
# ----------------------------------------------------------------------

def stair_numbering(m):
    """
    Number columns and rows 1..rows+cols along the upper stair of M.

    Column j is passed before row i exactly when j <= mu_i, so
    l_j = j + #{i : mu_i < j} and r_i = i + min(mu_i, n).
    """
    if not is_monotone_circular_ordering(m):
        raise PreconditionError("stair_numbering", "matrix has no monotone circular ordering")
    n = m.cols
    mu = compute_lambda_mu(m).mu
    l = tuple(j + sum(1 for value in mu if value < j) for j in range(1, n + 1))
    r = tuple(i + 1 + min(value, n) for i, value in enumerate(mu))

    if sorted(l + r) != list(range(1, m.rows + n + 1)):
        raise ConstructionError(f"stair numbers are not a bijection: l={l}, r={r}")
    for i in range(m.rows):
        for j in range(n):
            if m.bits[i, j] and not r[i] > l[j]:
                raise ConstructionError(f"stair order broken at ({i}, {j}): r={r[i]}, l={l[j]}")
    return StairNumbering(l, r)


def compute_arc_indices(lambda_mu, n):
    eff = lambda_mu.stretches
    s, s_prime, k = [], [], []
    for x in eff:
        if x.kind is TYPE1:
            last = max(
                j for j, e in enumerate(eff, start=1)
                if (e.kind is TYPE1 and e.i1 == x.i1)
                or (e.kind is TYPE2 and x.i1 in (e.i3, e.i4))
            )
            s.append(n + last)
            s_prime.append(None)
            k.append(None)
        else:
            s.append(None)
            s_prime.append(n + max(
                j for j, e in enumerate(eff, start=1)
                if e.kind is TYPE2 and x.i3 in (e.i3, e.i4)
            ))
            k.append(n + max(
                j for j, e in enumerate(eff, start=1)
                if e.kind is TYPE2 and e.i4 == x.i4
            ))
    return ArcIndices(tuple(s), tuple(s_prime), tuple(k))


def construct_arcs(m, stairs, lambda_mu):
    """
    One arc per row of M on the circle of circumference 2n+1.

    Type1 row i: a = l[i1] + (n+i-i1)/(s_i-i1+1), b = r_i.
    Type2 row i: a = l[i3] + (n+i-i3)/(s'_i-i3+1), b = l[i4] + (n+i-i4)/(k_i-i4+1).
    """
    n = m.cols
    L = 2 * n + 1
    l, r = stairs.l, stairs.r
    indices = compute_arc_indices(lambda_mu, n)
    arcs = []
    for i, x in enumerate(lambda_mu.stretches, start=1):
        if x.kind is TYPE1:
            a = l[x.i1 - 1] + Fraction(n + i - x.i1, indices.s[i - 1] - x.i1 + 1)
            b = Fraction(r[i - 1])
        else:
            a = l[x.i3 - 1] + Fraction(n + i - x.i3, indices.s_prime[i - 1] - x.i3 + 1)
            b = l[x.i4 - 1] + Fraction(n + i - x.i4, indices.k[i - 1] - x.i4 + 1)
        arcs.append(CircularArc.of(a, b, L))
    for kind in (TYPE1, TYPE2):
        same = [arc for arc, x in zip(arcs, lambda_mu.stretches) if x.kind is kind]
        for first, second in zip(same, same[1:]):
            if not (first.a.value < second.a.value and first.b.value < second.b.value):
                raise ConstructionError(f"{kind.value} arcs out of order: {first} before {second}")
    if not arcs_are_proper(arcs):
        raise ConstructionError("constructed arcs are not proper")
    return arcs


def construct_points(m, stairs, arcs):
    """p_j = max{l_j, max S_j, min Q_j}, skipping empty S_j / Q_j."""
    eff = compute_lambda_mu(m).stretches
    n = m.cols
    L = arcs[0].circumference
    points = []
    for j in range(1, n + 1):
        starts = [arcs[i].a.value for i, e in enumerate(eff)
                  if (e.kind is TYPE1 and e.i1 == j) or (e.kind is TYPE2 and e.i3 == j)]
        ends = [arcs[i].b.value for i, e in enumerate(eff) if e.kind is TYPE2 and e.i4 == j]
        candidates = [Fraction(stairs.l[j - 1])]
        if starts:
            candidates.append(max(starts))
        if ends:
            candidates.append(min(ends))
        p = max(candidates)
        if not stairs.l[j - 1] <= p < stairs.l[j - 1] + 1:
            raise ConstructionError(f"point of column {j} left its stair cell: {p}")
        points.append(CirclePos(p, L))
    return points


def construct_proper_representation(b, row_vertices, col_vertices):
    """
    Run the pipeline on a matrix B already satisfying the conditions.

    Parameters:
    b (BinaryMatrix): B, rows and columns permuted from A*(g)
    row_vertices (sequence): Vertex of each row of B
    col_vertices (sequence): Vertex of each column of B

    Returns:
    tuple: (CatchRepresentation, ProperTrace)
    """
    blocks = build_D(b)
    monotone = insert_full_rows(blocks)
    m = monotone.matrix
    profile = compute_lambda_mu(m)
    stairs = stair_numbering(m)
    arcs = construct_arcs(m, stairs, profile)
    points = construct_points(m, stairs, arcs)

    for i in range(m.rows):
        for j in range(m.cols):
            if bool(m.bits[i, j]) != arc_contains(arcs[i], points[j]):
                raise ConstructionError(f"entry ({i}, {j}) of M disagrees with the constructed arcs")

    n = b.cols
    rep_arcs = [None] * n
    rep_points = [None] * n
    for i, source_row in enumerate(monotone.rows):
        rep_arcs[row_vertices[source_row]] = arcs[i]
    for j, vertex in enumerate(col_vertices):
        rep_points[vertex] = points[j]
    rep = CatchRepresentation(2 * n + 1, rep_arcs, rep_points)

    trace = ProperTrace(
        column_vertices=tuple(col_vertices),
        d_vertices=tuple(row_vertices[i] for i in blocks.d),
        m_vertices=tuple(row_vertices[i] for i in monotone.rows),
        placement=monotone.placement,
        lambda_mu=profile,
        stairs=stairs,
        indices=compute_arc_indices(profile, n),
        points=tuple(p.value for p in points),
    )
    return rep, trace


# ----------------------------------------------------------------------
# Recognition
# ----------------------------------------------------------------------

def recognize_proper_cacd(g, trace=False):
    """
    Decide proper-CACD membership.

    Every row-COP column ordering of A*(g) is tried in canonical order; the
    first one passing the conditions whose constructed representation
    verifies and is proper is the certificate.
    """
    if g.n > DESK_BOUND:
        raise SizeBoundError("recognize_proper_cacd", g.n, DESK_BOUND)

    a = augmented_adjacency(g)
    failures = Counter()
    candidates = 0
    for order in enumerate_row_cop_orderings(a):
        candidates += 1
        b0 = a.permute_columns(order)
        row_order = find_row_cop_ordering(b0.transpose())
        if row_order is None:
            failures["column-cop"] += 1
            continue
        b = b0.permute_rows(row_order)
        report = check_conditions(b)
        if not report.cond2:
            failures["condition-2"] += 1
            continue
        if not report.cond3:
            failures["condition-3"] += 1
            continue
        try:
            rep, steps = construct_proper_representation(b, row_order.perm, order.perm)
        except ConstructionError as e:
            logger.warning("construction failed for column order %s: %s", order.to_list(), e)
            failures["construction"] += 1
            continue
        if verify(rep, g) and is_proper(rep):
            return Verdict.accept(
                "proper",
                Certificate("representation", ordering=order, representation=rep,
                            trace=steps.to_dict() if trace else None),
            )
        logger.warning("representation for column order %s failed verification", order.to_list())
        failures["verification"] += 1

    return Verdict.reject(
        "proper",
        Witness("exhausted", detail={"candidates": candidates, "failures": dict(failures)}),
    )

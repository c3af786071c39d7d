"""
Reference instances
Worked examples with known answers: the seven-vertex proper construction,
the monotone-ordering example matrix, the complement-cycle representations
and the small classification examples. Vertex v_k is index k-1.
"""

from fractions import Fraction

from core.binary_matrix import BinaryMatrix
from core.digraph import Digraph
from core.representation import CatchRepresentation

# A*(G) of the seven-vertex proper example, rows and columns v1..v7
SEVEN_VERTEX_AUGMENTED = (
    "1111111",
    "1111100",
    "0011110",
    "0011100",
    "1111111",
    "1110011",
    "1100011",
)

# Expected outcome of the proper construction on it
SEVEN_VERTEX_M_ORDER = (1, 3, 2, 0, 4, 6, 5)
SEVEN_VERTEX_FULL_ROWS = (0, 4)
SEVEN_VERTEX_STAIRS_L = (1, 2, 3, 4, 5, 8, 10)
SEVEN_VERTEX_STAIRS_R = (6, 7, 9, 11, 12, 13, 14)
SEVEN_VERTEX_ARCS = (
    (Fraction(15, 8), Fraction(6)),
    (Fraction(7, 2), Fraction(7)),
    (Fraction(43, 12), Fraction(9)),
    (Fraction(11, 3), Fraction(11, 4)),
    (Fraction(15, 4), Fraction(17, 6)),
    (Fraction(79, 9), Fraction(35, 12)),
    (Fraction(80, 9), Fraction(47, 12)),
)
SEVEN_VERTEX_POINTS = (
    Fraction(15, 8), Fraction(11, 4), Fraction(47, 12), Fraction(4), Fraction(5),
    Fraction(80, 9), Fraction(10),
)
# The same values as printed to two decimals
SEVEN_VERTEX_ARCS_PRINTED = (
    (1.87, 6), (3.5, 7), (3.58, 9), (3.66, 2.75), (3.75, 2.83), (8.77, 2.91), (8.88, 3.91),
)
SEVEN_VERTEX_POINTS_PRINTED = (1.87, 2.75, 3.91, 4, 5, 8.88, 10)

# Matrix with a monotone circular ordering, and its (lambda, mu) profile
MONOTONE_EXAMPLE = (
    "1111000",
    "0011100",
    "0011110",
    "1111111",
    "1111111",
    "1100011",
    "1110011",
)
MONOTONE_EXAMPLE_LAMBDA_MU = ((1, 4), (3, 5), (3, 6), (3, 9), (3, 9), (6, 9), (6, 10))

# Oriented CACDs whose underlying graphs are the complements of C6 and C7
COMPLEMENT_C6_REPRESENTATION = (
    7,
    [("3", "6", "5"), ("1.9", "2.1", "2"), ("2.9", "3.1", "3"),
     ("5.9", "2", "6"), ("2", "4.1", "4"), ("0.9", "3", "1")],
)
COMPLEMENT_C7_REPRESENTATION = (
    8,
    [("4.9", "7.1", "5"), ("0.9", "3.1", "1"), ("3.9", "6.1", "4"), ("6.9", "2.1", "7"),
     ("2.9", "5.1", "3"), ("5.9", "1.1", "6"), ("1.9", "4.1", "2")],
)

# Classification examples on five and four vertices
CLASSIFICATION_EXAMPLES = {
    "five-vertex-mixed": (5, [(0, 1), (3, 0), (3, 1), (1, 2), (2, 1), (2, 3), (4, 0), (3, 4)]),
    "triangle-with-tail": (4, [(0, 1), (1, 2), (2, 0), (2, 3)]),
    "directed-four-cycle": (4, [(0, 1), (1, 2), (2, 3), (3, 0)]),
    "four-cycle-with-digon": (4, [(0, 1), (1, 2), (2, 1), (2, 3), (3, 0)]),
}


def seven_vertex_matrix():
    return BinaryMatrix.from_rows(SEVEN_VERTEX_AUGMENTED)


def digraph_from_augmented(rows):
    """Digraph whose A* is the given square 0/1 matrix."""
    edges = [
        (u, v)
        for u, row in enumerate(rows)
        for v, entry in enumerate(row)
        if u != v and int(entry)
    ]
    return Digraph.from_edges(len(rows), edges)


def seven_vertex_digraph():
    return digraph_from_augmented(SEVEN_VERTEX_AUGMENTED)


def monotone_example_matrix():
    return BinaryMatrix.from_rows(MONOTONE_EXAMPLE)


def complement_c6_representation():
    L, entries = COMPLEMENT_C6_REPRESENTATION
    return CatchRepresentation.from_values(L, entries)


def complement_c7_representation():
    L, entries = COMPLEMENT_C7_REPRESENTATION
    return CatchRepresentation.from_values(L, entries)


def classification_example(name):
    n, edges = CLASSIFICATION_EXAMPLES[name]
    return Digraph.from_edges(n, edges)

"""
Binary matrices - augmented adjacency matrices and their row/column permutations
"""

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True, eq=False)
class BinaryMatrix:
    """Immutable rows x cols 0/1 matrix backed by a read-only numpy array."""

    bits: np.ndarray

    def __post_init__(self):
        array = np.array(self.bits, dtype=bool, copy=True)
        if array.ndim != 2:
            raise ValueError(f"binary matrix must be 2-dimensional, got shape {array.shape}")
        if array.shape[0] < 1 or array.shape[1] < 1:
            raise ValueError(f"binary matrix needs at least one row and column, got {array.shape}")
        array.setflags(write=False)
        object.__setattr__(self, "bits", array)

    @classmethod
    def from_rows(cls, rows):
        """Build from a sequence of rows given as 0/1 sequences or '0110' strings."""
        parsed = [[int(ch) for ch in row] if isinstance(row, str) else list(row) for row in rows]
        return cls(np.array(parsed, dtype=bool))

    @classmethod
    def from_masks(cls, masks, cols):
        """Build from integer row masks (bit j = column j)."""
        array = np.zeros((len(masks), cols), dtype=bool)
        for i, mask in enumerate(masks):
            for j in range(cols):
                array[i, j] = (mask >> j) & 1
        return cls(array)

    @property
    def rows(self):
        return self.bits.shape[0]

    @property
    def cols(self):
        return self.bits.shape[1]

    @property
    def shape(self):
        return self.bits.shape

    def row(self, i):
        return self.bits[i]

    def row_mask(self, i):
        """Row i as an integer with bit j set iff entry (i, j) is 1."""
        return sum(1 << int(j) for j in np.flatnonzero(self.bits[i]))

    def row_masks(self):
        return [self.row_mask(i) for i in range(self.rows)]

    def transpose(self):
        return BinaryMatrix(self.bits.T)

    def permute_columns(self, order):
        """Matrix whose column k is column order[k] of this one."""
        return BinaryMatrix(self.bits[:, list(order)])

    def permute_rows(self, order):
        """Matrix whose row k is row order[k] of this one."""
        return BinaryMatrix(self.bits[list(order), :])

    def is_full_row(self, i):
        return bool(self.bits[i].all())

    def is_zero_row(self, i):
        return not self.bits[i].any()

    def to_lists(self):
        return self.bits.astype(int).tolist()

    def to_strings(self):
        return ["".join("1" if x else "0" for x in row) for row in self.bits]

    def __eq__(self, other):
        if not isinstance(other, BinaryMatrix):
            return NotImplemented
        return self.bits.shape == other.bits.shape and bool(np.array_equal(self.bits, other.bits))

    def __hash__(self):
        return hash((self.bits.shape, self.bits.tobytes()))

    def __str__(self):
        return "\n".join(self.to_strings())


def augmented_adjacency(g):
    """A*(g): the adjacency matrix of g with ones on the principal diagonal; a square BinaryMatrix is taken as is."""
    source = g.bits if isinstance(g, BinaryMatrix) else g.adjacency
    array = np.array(source, dtype=bool)
    if array.shape[0] != array.shape[1]:
        raise ValueError(f"augmented adjacency needs a square matrix, got {array.shape}")
    np.fill_diagonal(array, True)
    return BinaryMatrix(array)

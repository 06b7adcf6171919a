# This file is part of zxcss.  The COPYRIGHT file at the top level of
# this repository contains the full copyright notices and license terms.
"""Dense linear algebra over GF(2).

Rows are stored bit-packed (numpy ``uint8``, most significant bit first) so
that row reduction works on whole bytes at a time.
"""
from __future__ import annotations

import numpy as np

__all__ = ['BinaryMatrix', 'rref', 'kernel', 'solve', 'rank',
           'same_row_space', 'in_row_space']


def _as_bits(data, cols=None):
    array = np.asarray(data, dtype=np.uint8)
    if array.ndim == 1:
        if array.size == 0 and cols:
            array = array.reshape(0, cols)
        else:
            array = array.reshape(1, -1) if array.size else \
                array.reshape(0, cols or 0)
    if array.ndim != 2:
        raise ValueError('a binary matrix needs two dimensions')
    if np.any(array > 1):
        raise ValueError('entries of a binary matrix must be 0 or 1')
    return array


class BinaryMatrix:
    """An immutable matrix over GF(2).

    Indices are 0-based; supports read back from bit strings use the
    left-most character as column 0.
    """

    __slots__ = ('rows', 'cols', '_packed')

    def __init__(self, data=(), cols=None):
        bits = _as_bits(data, cols)
        if cols is not None and bits.shape[1] != cols:
            raise ValueError('expected %d columns, got %d'
                             % (cols, bits.shape[1]))
        self.rows, self.cols = bits.shape
        self._packed = np.packbits(bits, axis=1)
        self._packed.setflags(write=False)

    @classmethod
    def _from_packed(cls, packed, cols):
        matrix = cls.__new__(cls)
        matrix.rows = packed.shape[0]
        matrix.cols = cols
        # padding bits past the last column stay zero
        matrix._packed = np.ascontiguousarray(packed, dtype=np.uint8)
        matrix._packed.setflags(write=False)
        return matrix

    @classmethod
    def zeros(cls, rows, cols):
        return cls(np.zeros((rows, cols), dtype=np.uint8))

    @classmethod
    def identity(cls, n):
        return cls(np.eye(n, dtype=np.uint8))

    @classmethod
    def from_bitstrings(cls, strings, cols=None):
        "builds a matrix from strings such as '1010101'"
        strings = [s.strip() for s in strings]
        if cols is None:
            cols = len(strings[0]) if strings else 0
        for string in strings:
            if len(string) != cols or set(string) - {'0', '1'}:
                raise ValueError('malformed bit string %r' % string)
        return cls([[int(c) for c in s] for s in strings], cols=cols)

    @classmethod
    def from_supports(cls, supports, cols):
        "builds a matrix whose rows are the indicator vectors of supports"
        bits = np.zeros((len(supports), cols), dtype=np.uint8)
        for i, support in enumerate(supports):
            for j in support:
                if not 0 <= j < cols:
                    raise ValueError('column %d out of range' % j)
                bits[i, j] = 1
        return cls(bits)

    def to_array(self):
        "returns the unpacked rows as a (rows, cols) uint8 array"
        return np.unpackbits(self._packed, axis=1, count=self.cols) \
            if self.cols else np.zeros((self.rows, 0), dtype=np.uint8)

    def to_bitstrings(self):
        return [''.join(str(b) for b in row) for row in self.to_array()]

    def row(self, i):
        return self.to_array()[i]

    def support(self, i):
        "the 0-based columns holding a one in row i"
        return tuple(int(j) for j in np.flatnonzero(self.row(i)))

    def weights(self):
        return self.to_array().sum(axis=1)

    def __getitem__(self, index):
        i, j = index
        return int(self._packed[i, j >> 3] >> (7 - (j & 7)) & 1)

    def __len__(self):
        return self.rows

    def __iter__(self):
        return iter(self.to_array())

    @property
    def shape(self):
        return (self.rows, self.cols)

    @property
    def T(self):
        return BinaryMatrix(self.to_array().T, cols=self.rows)

    @property
    def rank(self):
        return rref(self)[2]

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise ValueError('shape mismatch %s @ %s'
                             % (self.shape, other.shape))
        product = self.to_array().astype(np.int64) @ \
            other.to_array().astype(np.int64)
        return BinaryMatrix(product % 2, cols=other.cols)

    def __add__(self, other):
        if self.shape != other.shape:
            raise ValueError('shape mismatch %s + %s'
                             % (self.shape, other.shape))
        return BinaryMatrix._from_packed(
            np.bitwise_xor(self._packed, other._packed), self.cols)

    def __eq__(self, other):
        if not isinstance(other, BinaryMatrix):
            return NotImplemented
        return (self.shape == other.shape
                and np.array_equal(self._packed, other._packed))

    def __hash__(self):
        return hash((self.shape, self._packed.tobytes()))

    def __repr__(self):
        return '<BinaryMatrix %dx%d %s>' % (
            self.rows, self.cols, ' '.join(self.to_bitstrings()))

    def vstack(self, *others):
        arrays = [self.to_array()] + [o.to_array() for o in others]
        for array in arrays:
            if array.shape[1] != self.cols:
                raise ValueError('column count mismatch')
        return BinaryMatrix(np.vstack(arrays), cols=self.cols)

    def hstack(self, *others):
        arrays = [self.to_array()] + [o.to_array() for o in others]
        return BinaryMatrix(np.hstack(arrays))

    def select_columns(self, columns):
        columns = list(columns)
        return BinaryMatrix(self.to_array()[:, columns], cols=len(columns))

    def select_rows(self, rows):
        rows = list(rows)
        return BinaryMatrix(self.to_array()[rows, :], cols=self.cols)

    def is_zero(self):
        return not self._packed.any()


def _column_bits(packed, col):
    return (packed[:, col >> 3] >> (7 - (col & 7))) & 1


def _reduce(matrix):
    """Gauss-Jordan elimination on [M | I].

    Returns the packed reduced rows, the packed transform and the pivot
    columns.
    """
    rows, cols = matrix.shape
    augmented = np.hstack([matrix.to_array(), np.eye(rows, dtype=np.uint8)])
    work = np.packbits(augmented, axis=1)
    pivots = []
    r = 0
    for col in range(cols):
        if r == rows:
            break
        column = _column_bits(work, col)
        candidates = np.flatnonzero(column[r:])
        if candidates.size == 0:
            continue
        p = r + int(candidates[0])
        if p != r:
            work[[r, p]] = work[[p, r]]
            column[[r, p]] = column[[p, r]]
        hits = np.flatnonzero(column)
        hits = hits[hits != r]
        if hits.size:
            work[hits] ^= work[r]
        pivots.append(col)
        r += 1
    unpacked = np.unpackbits(work, axis=1, count=cols + rows)
    return unpacked[:, :cols], unpacked[:, cols:], pivots


def rref(matrix: BinaryMatrix):
    """Reduced row echelon form of matrix.

    Returns ``(R, T, rank)`` with ``R = T @ matrix`` and ``T`` invertible.
    """
    reduced, transform, pivots = _reduce(matrix)
    return (BinaryMatrix(reduced, cols=matrix.cols),
            BinaryMatrix(transform, cols=matrix.rows), len(pivots))


def rank(matrix: BinaryMatrix) -> int:
    return len(_reduce(matrix)[2])


def kernel(matrix: BinaryMatrix) -> BinaryMatrix:
    """A basis of the right null space ``{v : matrix @ v = 0}``, one vector
    per row."""
    reduced, _, pivots = _reduce(matrix)
    free = [c for c in range(matrix.cols) if c not in set(pivots)]
    basis = np.zeros((len(free), matrix.cols), dtype=np.uint8)
    for i, f in enumerate(free):
        basis[i, f] = 1
        for row, p in enumerate(pivots):
            basis[i, p] = reduced[row, f]
    return BinaryMatrix(basis, cols=matrix.cols)


def solve(matrix: BinaryMatrix, target):
    """Finds x with ``x @ matrix = target`` or returns None.

    ``target`` has one entry per column of matrix; the solution has one entry
    per row.
    """
    target = np.asarray(target, dtype=np.uint8).reshape(-1).copy()
    if target.size != matrix.cols:
        raise ValueError('target has %d entries, expected %d'
                         % (target.size, matrix.cols))
    reduced, transform, pivots = _reduce(matrix)
    combination = np.zeros(matrix.rows, dtype=np.uint8)
    for row, p in enumerate(pivots):
        if target[p]:
            target ^= reduced[row]
            combination[row] = 1
    if target.any():
        return None
    return (combination.astype(np.int64) @ transform.astype(np.int64)) % 2


def in_row_space(matrix: BinaryMatrix, vector) -> bool:
    return solve(matrix, vector) is not None


def same_row_space(a: BinaryMatrix, b: BinaryMatrix) -> bool:
    if a.cols != b.cols:
        return False
    ra = rank(a)
    return ra == rank(b) == rank(a.vstack(b))

"""
UlrichForge - Exact Linear Algebra Service
Rank, kernel and cokernel dimensions of dense matrices over Q and F_p.

Over F_p the elimination runs on int64 arrays (p < 2^31, so every product of
two reduced entries fits). Over Q the matrix is cleared to integers and
reduced fraction-free (Bareiss), every intermediate entry being a minor.
"""
from fractions import Fraction
from math import lcm
from typing import Sequence

import numpy as np

from schemas.field import FieldSpec

SCREEN_PRIME = 2147483647


class ExactMatrix:
    """Dense exact matrix tied to a field."""

    def __init__(self, data: np.ndarray, field: FieldSpec):
        if data.ndim != 2:
            raise ValueError("ExactMatrix needs a 2-d array")
        self.field = field
        if field.is_rational:
            self.data = data.astype(object)
        else:
            self.data = np.mod(data.astype(np.int64), field.prime)

    @classmethod
    def zeros(cls, rows: int, cols: int, field: FieldSpec) -> "ExactMatrix":
        dtype = object if field.is_rational else np.int64
        return cls(np.zeros((rows, cols), dtype=dtype), field)

    @classmethod
    def identity(cls, n: int, field: FieldSpec) -> "ExactMatrix":
        m = cls.zeros(n, n, field)
        for i in range(n):
            m.data[i, i] = 1
        return m

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], field: FieldSpec) -> "ExactMatrix":
        data = np.array([list(r) for r in rows], dtype=object)
        if data.size == 0:
            data = np.zeros((len(rows), 0), dtype=object)
        return cls(data, field)

    @classmethod
    def blocks(cls, grid: Sequence[Sequence["ExactMatrix"]], field: FieldSpec) -> "ExactMatrix":
        """Assemble a block matrix; every block in a block row shares its height."""
        if not grid:
            return cls.zeros(0, 0, field)
        rows = [np.hstack([blk.data for blk in row]) if row else None for row in grid]
        return cls(np.vstack(rows), field)

    @property
    def shape(self) -> tuple:
        return self.data.shape

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    @property
    def T(self) -> "ExactMatrix":
        return ExactMatrix(self.data.T.copy(), self.field)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.field == other.field and self.shape == other.shape and bool(np.all(self.data == other.data))

    def is_zero(self) -> bool:
        return bool(np.all(self.data == 0))

    def reduce_mod(self, p: int) -> "ExactMatrix":
        """Reduce an integral matrix over Q modulo p."""
        if not self.field.is_rational:
            raise ValueError("already over a finite field")
        out = np.empty(self.shape, dtype=object)
        for idx, x in np.ndenumerate(self.data):
            q = Fraction(x)
            if q.denominator != 1:
                raise ValueError(f"entry {x} is not integral")
            out[idx] = q.numerator % p
        return ExactMatrix(out, FieldSpec(prime=p))


def _rank_modp(data: np.ndarray, p: int) -> int:
    a = np.mod(data.astype(np.int64), p)
    m, n = a.shape
    r = 0
    for c in range(n):
        if r == m:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv], :] = a[[piv, r], :]
        inv = pow(int(a[r, c]), -1, p)
        a[r, c:] = (a[r, c:] * inv) % p
        below = r + 1 + np.nonzero(a[r + 1:, c])[0]
        if below.size:
            a[below, c:] = (a[below, c:] - np.outer(a[below, c], a[r, c:])) % p
        r += 1
    return r


def _integral(data: np.ndarray) -> np.ndarray:
    """Scale each row of a rational matrix by the lcm of its denominators."""
    out = np.empty(data.shape, dtype=object)
    for i in range(data.shape[0]):
        row = [Fraction(x) for x in data[i]]
        den = lcm(*(x.denominator for x in row)) if row else 1
        out[i, :] = [int(x * den) for x in row]
    return out


def _rank_bareiss(data: np.ndarray) -> int:
    a = _integral(data)
    m, n = a.shape
    r = 0
    prev = 1
    for c in range(n):
        if r == m:
            break
        nz = [i for i in range(r, m) if a[i, c] != 0]
        if not nz:
            continue
        piv = nz[0]
        if piv != r:
            a[[r, piv], :] = a[[piv, r], :]
        pivot = a[r, c]
        if r + 1 < m and c + 1 < n:
            a[r + 1:, c + 1:] = (a[r + 1:, c + 1:] * pivot - np.outer(a[r + 1:, c], a[r, c + 1:])) // prev
        a[r + 1:, c] = 0
        prev = pivot
        r += 1
    return r


def rank(matrix: ExactMatrix) -> int:
    if matrix.rows == 0 or matrix.cols == 0:
        return 0
    if matrix.field.is_rational:
        # rank mod p never exceeds the rank over Q, so full rank mod p settles it
        integral = ExactMatrix(_integral(matrix.data), matrix.field)
        full = min(matrix.shape)
        if rank(integral.reduce_mod(SCREEN_PRIME)) == full:
            return full
        return _rank_bareiss(integral.data)
    return _rank_modp(matrix.data, matrix.field.prime)


def kernel_dim(matrix: ExactMatrix) -> int:
    return matrix.cols - rank(matrix)


def cokernel_dim(matrix: ExactMatrix) -> int:
    return matrix.rows - rank(matrix)

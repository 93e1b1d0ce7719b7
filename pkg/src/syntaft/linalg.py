"""Exact linear algebra over the rationals.

Matrices are numpy arrays with ``dtype=object`` holding ``fractions.Fraction``
entries, so every operation here is exact: rank, kernel and intersection are
genuine yes/no computations with no tolerance anywhere.  Dimensions stay at
desk scale (tens), so dense Gauss-Jordan is all we need.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from syntaft.errors import DimensionMismatch

ZERO = Fraction(0)
ONE = Fraction(1)


def rational(x) -> Fraction:
    """Coerce ints, "p/q" strings and Fractions to Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as a rational")


def ratmat(rows) -> np.ndarray:
    """Build a 2-D object matrix of Fractions from nested sequences."""
    rows = [list(r) for r in rows]
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    m = np.empty((nrows, ncols), dtype=object)
    for i, row in enumerate(rows):
        if len(row) != ncols:
            raise DimensionMismatch("ragged rows")
        for j, x in enumerate(row):
            m[i, j] = rational(x)
    return m


def ratvec(entries) -> np.ndarray:
    v = np.empty(len(list(entries)) if not isinstance(entries, (list, tuple)) else len(entries), dtype=object)
    for i, x in enumerate(entries):
        v[i] = rational(x)
    return v


def zeros(nrows: int, ncols: int) -> np.ndarray:
    m = np.empty((nrows, ncols), dtype=object)
    m[:] = ZERO
    return m


def zvec(n: int) -> np.ndarray:
    v = np.empty(n, dtype=object)
    v[:] = ZERO
    return v


def eye(n: int) -> np.ndarray:
    m = zeros(n, n)
    for i in range(n):
        m[i, i] = ONE
    return m


def is_zero(a: np.ndarray) -> bool:
    return all(x == 0 for x in a.flat)


def rref(m: np.ndarray) -> np.ndarray:
    """Unique reduced row echelon form; the row space is preserved."""
    a = m.copy()
    nrows, ncols = a.shape
    pivot_row = 0
    for col in range(ncols):
        pr = None
        for r in range(pivot_row, nrows):
            if a[r, col] != 0:
                pr = r
                break
        if pr is None:
            continue
        if pr != pivot_row:
            a[[pivot_row, pr]] = a[[pr, pivot_row]]
        inv = ONE / a[pivot_row, col]
        if inv != 1:
            a[pivot_row, :] = a[pivot_row, :] * inv
        for r in range(nrows):
            if r != pivot_row and a[r, col] != 0:
                a[r, :] = a[r, :] - a[r, col] * a[pivot_row, :]
        pivot_row += 1
        if pivot_row == nrows:
            break
    return a


def pivot_columns(rref_m: np.ndarray) -> list[int]:
    """Pivot column indices of a matrix already in RREF."""
    pivots = []
    nrows, ncols = rref_m.shape
    for r in range(nrows):
        for c in range(ncols):
            if rref_m[r, c] != 0:
                pivots.append(c)
                break
    return pivots


def rank(m: np.ndarray) -> int:
    return len(pivot_columns(rref(m)))


def solve(a: np.ndarray, b: np.ndarray):
    """One solution x of a x = b, or None when inconsistent."""
    nrows, ncols = a.shape
    if b.shape != (nrows,):
        raise DimensionMismatch(f"rhs length {b.shape} does not match {nrows} rows")
    aug = zeros(nrows, ncols + 1)
    aug[:, :ncols] = a
    aug[:, ncols] = b
    red = rref(aug)
    pivots = pivot_columns(red)
    if ncols in pivots:
        return None
    x = zvec(ncols)
    for r, c in enumerate(pivots):
        x[c] = red[r, ncols]
    return x


def inverse(m: np.ndarray) -> np.ndarray:
    n, nc = m.shape
    if n != nc:
        raise DimensionMismatch("inverse of a non-square matrix")
    aug = zeros(n, 2 * n)
    aug[:, :n] = m
    aug[:, n:] = eye(n)
    red = rref(aug)
    if pivot_columns(red)[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return red[:, n:]


def det(m: np.ndarray) -> Fraction:
    """Exact determinant by fraction-free-ish Gaussian elimination."""
    n, nc = m.shape
    if n != nc:
        raise DimensionMismatch("determinant of a non-square matrix")
    a = m.copy()
    sign = 1
    result = ONE
    for col in range(n):
        pr = None
        for r in range(col, n):
            if a[r, col] != 0:
                pr = r
                break
        if pr is None:
            return ZERO
        if pr != col:
            a[[col, pr]] = a[[pr, col]]
            sign = -sign
        result *= a[col, col]
        inv = ONE / a[col, col]
        for r in range(col + 1, n):
            if a[r, col] != 0:
                a[r, col:] = a[r, col:] - (a[r, col] * inv) * a[col, col:]
    return sign * result


def _readonly(a: np.ndarray) -> np.ndarray:
    a.flags.writeable = False
    return a


@dataclass(frozen=True, eq=False)
class Subspace:
    """Linear subspace of Q^n in canonical form.

    The basis rows are the RREF of any spanning set, so two subspaces are
    equal iff their basis matrices are identical.
    """

    ambient_dim: int
    basis: np.ndarray  # dim x ambient_dim, rows in RREF

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    @staticmethod
    def from_rows(rows: np.ndarray, ambient_dim: int | None = None) -> "Subspace":
        if rows.ndim != 2:
            raise DimensionMismatch("expected a 2-D array of spanning rows")
        n = rows.shape[1] if ambient_dim is None else ambient_dim
        red = rref(rows)
        r = len(pivot_columns(red))
        return Subspace(n, _readonly(red[:r].copy()))

    @staticmethod
    def zero(n: int) -> "Subspace":
        return Subspace(n, _readonly(zeros(0, n)))

    @staticmethod
    def full(n: int) -> "Subspace":
        return Subspace(n, _readonly(eye(n)))

    def contains(self, v: np.ndarray) -> bool:
        if v.shape != (self.ambient_dim,):
            raise DimensionMismatch("vector length does not match ambient dimension")
        r = v.copy()
        for row in self.basis:
            p = next(c for c in range(self.ambient_dim) if row[c] != 0)
            if r[p] != 0:
                r = r - r[p] * row
        return is_zero(r)

    def coordinates(self, v: np.ndarray):
        """Coefficients of v in the basis rows, or None when v is outside."""
        if self.dim == 0:
            return zvec(0) if is_zero(v) else None
        return solve(self.basis.T, v)

    def sum(self, other: "Subspace") -> "Subspace":
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatch("ambient dimensions differ")
        stacked = np.concatenate([self.basis, other.basis], axis=0)
        return Subspace.from_rows(stacked, self.ambient_dim)

    def perp(self) -> "Subspace":
        """Orthogonal complement for the standard dot product."""
        return kernel(self.basis if self.dim else zeros(0, self.ambient_dim))

    def intersect(self, other: "Subspace") -> "Subspace":
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatch("ambient dimensions differ")
        # U cap V = (U^perp + V^perp)^perp, valid over Q.
        return self.perp().sum(other.perp()).perp()

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and np.array_equal(self.basis, other.basis)

    def __hash__(self):
        return hash((self.ambient_dim, tuple(self.basis.flat)))

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim})"


def kernel(m: np.ndarray) -> Subspace:
    """Right null space {v : m v = 0} of an r x n matrix."""
    nrows, ncols = m.shape
    if nrows == 0:
        return Subspace.full(ncols)
    red = rref(m)
    pivots = pivot_columns(red)
    free = [c for c in range(ncols) if c not in pivots]
    rows = zeros(len(free), ncols)
    for k, fc in enumerate(free):
        rows[k, fc] = ONE
        for r, pc in enumerate(pivots):
            rows[k, pc] = -red[r, fc]
    return Subspace.from_rows(rows, ncols)


def row_space(m: np.ndarray) -> Subspace:
    return Subspace.from_rows(m, m.shape[1])


class SpanBuilder:
    """Incrementally grown subspace with membership tests.

    Keeps an internal row-reduced copy of the vectors added so far; `add`
    reports whether the vector increased the rank.
    """

    def __init__(self, ambient_dim: int):
        self.ambient_dim = ambient_dim
        self._rows: list[np.ndarray] = []
        self._pivots: list[int] = []

    @property
    def dim(self) -> int:
        return len(self._rows)

    def _reduce(self, v: np.ndarray) -> np.ndarray:
        r = v.copy()
        for row, p in zip(self._rows, self._pivots):
            if r[p] != 0:
                r = r - r[p] * row
        return r

    def contains(self, v: np.ndarray) -> bool:
        return is_zero(self._reduce(v))

    def add(self, v: np.ndarray) -> bool:
        """Insert v; returns True when it was independent of the span."""
        r = self._reduce(v)
        p = next((c for c in range(self.ambient_dim) if r[c] != 0), None)
        if p is None:
            return False
        r = r * (ONE / r[p])
        self._rows.append(r)
        self._pivots.append(p)
        return True

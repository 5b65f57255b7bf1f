"""Polynomial matrices: fraction-free determinants, minors, Jacobians, ranks."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Callable, Mapping, Sequence

from .poly import Poly, Scalar, as_poly, exact_div


class DimensionError(ValueError):
    pass


class PolyMatrix:
    """Dense row-major matrix of :class:`Poly` entries over a common variable tuple."""

    __slots__ = ("rows", "cols", "entries", "vars")

    def __init__(self, rows: int, cols: int, entries: Sequence, vars: Sequence[str] = ()):
        if len(entries) != rows * cols:
            raise DimensionError(f"{len(entries)} entries for a {rows}x{cols} matrix")
        polys = [as_poly(e, vars) for e in entries]
        allv = tuple(vars)
        for p in polys:
            allv = allv + tuple(v for v in p.vars if v not in allv)
        self.rows = rows
        self.cols = cols
        self.vars = allv
        self.entries = tuple(p.with_vars(allv) for p in polys)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], vars: Sequence[str] = ()) -> "PolyMatrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise DimensionError("ragged rows")
        return cls(len(rows), ncols, [e for r in rows for e in r], vars)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> list[Poly]:
        return list(self.entries[i * self.cols:(i + 1) * self.cols])

    def to_rows(self) -> list[list[Poly]]:
        return [self.row(i) for i in range(self.rows)]

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "PolyMatrix":
        return PolyMatrix(len(rows), len(cols),
                          [self[i, j] for i in rows for j in cols], self.vars)

    def permute_rows(self, perm: Sequence[int]) -> "PolyMatrix":
        return PolyMatrix.from_rows([self.row(i) for i in perm], self.vars)

    def transpose(self) -> "PolyMatrix":
        return PolyMatrix(self.cols, self.rows,
                          [self[i, j] for j in range(self.cols) for i in range(self.rows)], self.vars)

    def map(self, fn: Callable[[Poly], Poly]) -> "PolyMatrix":
        return PolyMatrix(self.rows, self.cols, [fn(e) for e in self.entries], self.vars)

    def evaluate(self, point: Mapping[str, Scalar]) -> list[list[Fraction]]:
        vals = [e.evaluate(point) for e in self.entries]
        return [vals[i * self.cols:(i + 1) * self.cols] for i in range(self.rows)]

    def __eq__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return (self.rows, self.cols) == (other.rows, other.cols) and all(
            a == b for a, b in zip(self.entries, other.entries))

    def __repr__(self):
        body = "; ".join(", ".join(str(e) for e in self.row(i)) for i in range(self.rows))
        return f"PolyMatrix({self.rows}x{self.cols}: [{body}])"


def determinant(m: PolyMatrix) -> Poly:
    """Bareiss fraction-free elimination with row pivoting.

    Every division in the Bareiss recurrence is exact, so the whole
    computation stays inside the polynomial ring.
    """
    if m.rows != m.cols:
        raise DimensionError(f"determinant of a non-square {m.rows}x{m.cols} matrix")
    n = m.rows
    zero = Poly.const(0, m.vars)
    if n == 0:
        return Poly.const(1, m.vars)
    a = [list(r) for r in m.to_rows()]
    sign = 1
    prev = Poly.const(1, m.vars)
    for k in range(n - 1):
        if a[k][k].is_zero():
            pivot = next((i for i in range(k + 1, n) if not a[i][k].is_zero()), None)
            if pivot is None:
                return zero
            a[k], a[pivot] = a[pivot], a[k]
            sign = -sign
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            for j in range(k + 1, n):
                num = a[i][j] * akk - aik * a[k][j]
                a[i][j] = num if prev.is_constant() and prev.constant_value() == 1 else exact_div(num, prev)
            a[i][k] = zero
        prev = akk
    det = a[n - 1][n - 1]
    return -det if sign < 0 else det


def cofactor_determinant(m: PolyMatrix) -> Poly:
    """Laplace expansion along the first row; exponential, used as a test oracle."""
    if m.rows != m.cols:
        raise DimensionError("cofactor expansion of a non-square matrix")
    n = m.rows
    if n == 0:
        return Poly.const(1, m.vars)
    if n == 1:
        return m[0, 0]
    total = Poly.const(0, m.vars)
    for j in range(n):
        if m[0, j].is_zero():
            continue
        minor = m.submatrix(range(1, n), [c for c in range(n) if c != j])
        term = m[0, j] * cofactor_determinant(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def minor_index_sets(rows: int, cols: int, k: int):
    if k > min(rows, cols) or k < 0:
        raise DimensionError(f"minor size {k} exceeds {rows}x{cols}")
    return [(r, c) for r in combinations(range(rows), k) for c in combinations(range(cols), k)]


def minors(m: PolyMatrix, k: int) -> list[Poly]:
    """All k x k minors, ordered lexicographically by (row set, column set)."""
    return [determinant(m.submatrix(r, c)) for r, c in minor_index_sets(m.rows, m.cols, k)]


def jacobian(polys: Sequence[Poly], vars: Sequence[str]) -> PolyMatrix:
    vars = tuple(vars)
    allv = vars
    for p in polys:
        allv = allv + tuple(v for v in p.vars if v not in allv)
    return PolyMatrix(len(polys), len(vars), [p.diff(v) for p in polys for v in vars], allv)


def rank_rational(rows: Sequence[Sequence[Scalar]]) -> int:
    """Exact rank of a rational matrix by Gaussian elimination."""
    a = [[Fraction(x) for x in r] for r in rows]
    if not a:
        return 0
    rank = 0
    ncols = len(a[0])
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(a)) if a[i][col]), None)
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        p = a[rank][col]
        for i in range(len(a)):
            if i != rank and a[i][col]:
                f = a[i][col] / p
                a[i] = [x - f * y for x, y in zip(a[i], a[rank])]
        rank += 1
        if rank == len(a):
            break
    return rank


def nullspace(rows: Sequence[Sequence[Scalar]], ncols: int | None = None) -> list[list[Fraction]]:
    """A basis of the right kernel of a rational matrix."""
    a = [[Fraction(x) for x in r] for r in rows]
    n = ncols if ncols is not None else (len(a[0]) if a else 0)
    pivots = []
    r = 0
    for col in range(n):
        pivot = next((i for i in range(r, len(a)) if a[i][col]), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        p = a[r][col]
        a[r] = [x / p for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][col]:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(col)
        r += 1
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fcol in free:
        v = [Fraction(0)] * n
        v[fcol] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -a[i][fcol]
        basis.append(v)
    return basis


def rank_at(m: PolyMatrix, point: Sequence[Scalar] | Mapping[str, Scalar]) -> int:
    """Rank of ``m`` evaluated at a rational point given in ``m.vars`` order or by name."""
    if not isinstance(point, Mapping):
        if len(point) != len(m.vars):
            raise DimensionError(f"point has {len(point)} coordinates, matrix has {len(m.vars)} variables")
        point = dict(zip(m.vars, point))
    return rank_rational(m.evaluate(point))


def generic_rank(m: PolyMatrix) -> int:
    """Rank over the fraction field of the coefficient ring.

    Largest k such that some k x k minor is a nonzero polynomial.
    """
    for k in range(min(m.rows, m.cols), 0, -1):
        for r, c in minor_index_sets(m.rows, m.cols, k):
            if not determinant(m.submatrix(r, c)).is_zero():
                return k
    return 0

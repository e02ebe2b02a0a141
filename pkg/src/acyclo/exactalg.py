"""Exact integer and rational linear algebra.

Smith normal form with unimodular witnesses, fraction-free rank, primitive
integer kernels and lattice saturation indices. Everything runs on Python's
arbitrary-precision integers; no floating point is used anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

# Exact rational carrier. Fraction already keeps denominators positive and in
# lowest terms, which is everything required of the type.
Rational = Fraction


@dataclass(frozen=True)
class IntMatrix:
    """Dense integer matrix stored row-major."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, data: Sequence[Sequence[int]], cols: int | None = None) -> "IntMatrix":
        data = [list(row) for row in data]
        if cols is None:
            cols = len(data[0]) if data else 0
        if any(len(row) != cols for row in data):
            raise ValueError("rows have inconsistent lengths")
        return cls(len(data), cols, tuple(int(x) for row in data for x in row))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, (0,) * (rows * cols))

    def at(self, i: int, j: int) -> int:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def column(self, j: int) -> tuple[int, ...]:
        return self.entries[j :: self.cols] if self.cols else ()

    def row_lists(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "IntMatrix":
        return IntMatrix(
            self.cols,
            self.rows,
            tuple(self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)),
        )

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError("dimension mismatch in matrix product")
        out = []
        for i in range(self.rows):
            ri = self.row(i)
            for j in range(other.cols):
                out.append(sum(ri[k] * other.at(k, j) for k in range(self.cols)))
        return IntMatrix(self.rows, other.cols, tuple(out))

    def determinant(self) -> int:
        """Exact determinant by fraction-free (Bareiss) elimination."""
        if self.rows != self.cols:
            raise ValueError("determinant requires a square matrix")
        n = self.rows
        if n == 0:
            return 1
        m = self.row_lists()
        sign = 1
        prev = 1
        for k in range(n - 1):
            if m[k][k] == 0:
                pivot = next((i for i in range(k + 1, n) if m[i][k]), None)
                if pivot is None:
                    return 0
                m[k], m[pivot] = m[pivot], m[k]
                sign = -sign
            pk = m[k][k]
            row_k = m[k]
            for i in range(k + 1, n):
                row_i = m[i]
                mik = row_i[k]
                for j in range(k + 1, n):
                    row_i[j] = (pk * row_i[j] - mik * row_k[j]) // prev
                row_i[k] = 0
            prev = pk
        return sign * m[n - 1][n - 1]


@dataclass(frozen=True)
class SnfResult:
    """Smith normal form: left_transform @ A @ right_transform is diagonal.

    Both transforms are unimodular. Nonzero invariant factors divide their
    successors; zero factors come last.
    """

    invariant_factors: tuple[int, ...]
    left_transform: IntMatrix
    right_transform: IntMatrix

    def diagonal_matrix(self, rows: int, cols: int) -> IntMatrix:
        m = [[0] * cols for _ in range(rows)]
        for i, f in enumerate(self.invariant_factors):
            m[i][i] = f
        return IntMatrix.from_rows(m, cols=cols)


def _min_abs_pivot(m: list[list[int]], t: int, rows: int, cols: int) -> tuple[int, int] | None:
    best = None
    best_val = None
    for i in range(t, rows):
        row = m[i]
        for j in range(t, cols):
            v = row[j]
            if v:
                a = abs(v)
                if best_val is None or a < best_val:
                    best, best_val = (i, j), a
                    if a == 1:
                        return best
    return best


def _diagonalize(m: list[list[int]], rows: int, cols: int, left=None, right=None) -> None:
    """Reduce m in place to Smith diagonal form.

    Pivots are chosen by minimal absolute value to limit coefficient growth.
    When given, ``left`` (rows x rows) and ``right`` (cols x cols, acted on by
    the same column operations as m) accumulate the unimodular transforms.
    """
    dim = min(rows, cols)
    t = 0
    while t < dim:
        piv = _min_abs_pivot(m, t, rows, cols)
        if piv is None:
            break
        i, j = piv
        if i != t:
            m[t], m[i] = m[i], m[t]
            if left is not None:
                left[t], left[i] = left[i], left[t]
        if j != t:
            for row in m:
                row[t], row[j] = row[j], row[t]
            if right is not None:
                for row in right:
                    row[t], row[j] = row[j], row[t]
        while True:
            p = m[t][t]
            col_clean = True
            for i in range(t + 1, rows):
                v = m[i][t]
                if v:
                    q = v // p
                    if q:
                        row_i, row_t = m[i], m[t]
                        for j in range(t, cols):
                            row_i[j] -= q * row_t[j]
                        if left is not None:
                            li, lt = left[i], left[t]
                            for j in range(len(li)):
                                li[j] -= q * lt[j]
                    if m[i][t]:
                        col_clean = False
            row_clean = True
            for j in range(t + 1, cols):
                v = m[t][j]
                if v:
                    q = v // p
                    if q:
                        for row in m:
                            row[j] -= q * row[t]
                        if right is not None:
                            for row in right:
                                row[j] -= q * row[t]
                    if m[t][j]:
                        row_clean = False
            if not (col_clean and row_clean):
                # Nonzero remainders are strictly smaller than |p|; promote the
                # smallest one to the pivot slot and repeat.
                cand = None
                cand_val = None
                for i in range(t, rows):
                    if m[i][t]:
                        a = abs(m[i][t])
                        if cand_val is None or a < cand_val:
                            cand, cand_val = ("row", i), a
                for j in range(t, cols):
                    if m[t][j]:
                        a = abs(m[t][j])
                        if cand_val is None or a < cand_val:
                            cand, cand_val = ("col", j), a
                kind, idx = cand
                if kind == "row" and idx != t:
                    m[t], m[idx] = m[idx], m[t]
                    if left is not None:
                        left[t], left[idx] = left[idx], left[t]
                elif kind == "col" and idx != t:
                    for row in m:
                        row[t], row[idx] = row[idx], row[t]
                    if right is not None:
                        for row in right:
                            row[t], row[idx] = row[idx], row[t]
                continue
            # Pivot isolated; pull in any entry it does not divide so the
            # divisibility chain holds.
            bad = None
            for i in range(t + 1, rows):
                row_i = m[i]
                for j in range(t + 1, cols):
                    if row_i[j] % p:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            row_b, row_t = m[bad], m[t]
            for j in range(t, cols):
                row_t[j] += row_b[j]
            if left is not None:
                lb, lt = left[bad], left[t]
                for j in range(len(lt)):
                    lt[j] += lb[j]
        if m[t][t] < 0:
            row_t = m[t]
            for j in range(t, cols):
                row_t[j] = -row_t[j]
            if left is not None:
                lt = left[t]
                for j in range(len(lt)):
                    lt[j] = -lt[j]
        t += 1


def snf(a: IntMatrix) -> SnfResult:
    """Smith normal form of an integer matrix, with transform witnesses."""
    m = a.row_lists()
    left = IntMatrix.identity(a.rows).row_lists()
    right = IntMatrix.identity(a.cols).row_lists()
    _diagonalize(m, a.rows, a.cols, left, right)
    factors = tuple(m[i][i] for i in range(min(a.rows, a.cols)))
    return SnfResult(
        factors,
        IntMatrix.from_rows(left, cols=a.rows),
        IntMatrix.from_rows(right, cols=a.cols),
    )


def _invariant_factors(m: list[list[int]], rows: int, cols: int) -> list[int]:
    # Transform-free fast path for callers that only need the factors.
    _diagonalize(m, rows, cols)
    return [m[i][i] for i in range(min(rows, cols))]


def rank(a: IntMatrix) -> int:
    """Rational rank, computed fraction-free (Bareiss elimination)."""
    m = a.row_lists()
    r, c = a.rows, a.cols
    rk = 0
    prev = 1
    for col in range(c):
        piv = next((i for i in range(rk, r) if m[i][col]), None)
        if piv is None:
            continue
        m[rk], m[piv] = m[piv], m[rk]
        p = m[rk][col]
        row_k = m[rk]
        for i in range(rk + 1, r):
            row_i = m[i]
            coef = row_i[col]
            for j in range(col, c):
                row_i[j] = (p * row_i[j] - coef * row_k[j]) // prev
        prev = p
        rk += 1
        if rk == r:
            break
    return rk


def nullspace(a: IntMatrix) -> list[tuple[int, ...]]:
    """Basis of the rational kernel, cleared to primitive integer vectors.

    One vector per free column of the reduced echelon form, in ascending
    column order, each scaled to content 1 with positive leading entry.
    """
    r, c = a.rows, a.cols
    m = [[Fraction(x) for x in a.row(i)] for i in range(r)]
    pivots: list[int] = []
    rk = 0
    for col in range(c):
        piv = next((i for i in range(rk, r) if m[i][col]), None)
        if piv is None:
            continue
        m[rk], m[piv] = m[piv], m[rk]
        p = m[rk][col]
        m[rk] = [x / p for x in m[rk]]
        for i in range(r):
            if i != rk and m[i][col]:
                f = m[i][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[rk])]
        pivots.append(col)
        rk += 1
    pivot_set = set(pivots)
    basis = []
    for free in range(c):
        if free in pivot_set:
            continue
        v = [Fraction(0)] * c
        v[free] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -m[i][free]
        den = 1
        for x in v:
            den = lcm(den, x.denominator)
        ints = [int(x * den) for x in v]
        g = 0
        for x in ints:
            g = gcd(g, x)
        ints = [x // g for x in ints]
        lead = next(x for x in ints if x)
        if lead < 0:
            ints = [-x for x in ints]
        basis.append(tuple(ints))
    return basis


def saturation_index(a: IntMatrix) -> int:
    """Index of the column lattice inside its saturation.

    Equals the product of the nonzero invariant factors; 1 for any matrix
    whose columns generate a saturated (e.g. unimodular) lattice.
    """
    prod = 1
    for f in _invariant_factors(a.row_lists(), a.rows, a.cols):
        if f:
            prod *= f
    return prod

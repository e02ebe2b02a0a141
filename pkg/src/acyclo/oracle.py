"""Independent brute-force verifiers.

Each oracle recomputes a headline quantity by an algorithm unrelated to the
one used in the main modules: tree counts by Laplacian determinant, lattice
points by direct membership scanning, Ehrhart coefficients by interpolation,
vertices by exhaustive proper-pattern scanning, and torsion by an alternating
extended-gcd elimination that shares no code with the Smith-form routine.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import comb

from .census import ehrhart
from .complexes import Hypergraph, boundary_matrix, cycle_space_dim, edge_columns
from .errors import BudgetExceededError
from .exactalg import IntMatrix
from .faces import SignPattern, validity_check
from .homology import SubcomplexSelection
from .ratlp import solve_feasibility

DEFAULT_GENERATOR_CAP = 8
DEFAULT_PATTERN_CAP = 12


@dataclass(frozen=True)
class OracleReport:
    """Side-by-side record of a theorem-path value and an oracle recomputation."""

    quantity: str
    theorem_value: object
    oracle_value: object
    agreement: bool

    @classmethod
    def compare(cls, quantity: str, theorem_value, oracle_value) -> "OracleReport":
        return cls(quantity, theorem_value, oracle_value, theorem_value == oracle_value)


def kirchhoff_tree_count(g: Hypergraph) -> int:
    """Spanning-tree count of a graph via a Laplacian cofactor determinant."""
    if g.d != 1:
        raise ValueError("Kirchhoff count requires a graph (d == 1)")
    n = g.n
    lap = [[0] * n for _ in range(n)]
    for i, j in g.edges:
        lap[i - 1][i - 1] += 1
        lap[j - 1][j - 1] += 1
        lap[i - 1][j - 1] -= 1
        lap[j - 1][i - 1] -= 1
    minor = [row[: n - 1] for row in lap[: n - 1]]
    return IntMatrix.from_rows(minor, cols=n - 1).determinant()


def _row_parametrization(cols, ambient: int, widths):
    """Pick independent rows (narrow boxes first) and an inverse for back-solving.

    Returns (pivot_rows, pivot_cols, inverse of the square submatrix on them),
    all over exact rationals, by local Gaussian elimination.
    """
    num_cols = len(cols)
    order = sorted(range(ambient), key=lambda r: (widths[r], r))
    basis: list[list[Fraction]] = []
    basis_pivot_cols: list[int] = []
    pivot_rows: list[int] = []
    for r in order:
        v = [Fraction(cols[j][r]) for j in range(num_cols)]
        for b, pc in zip(basis, basis_pivot_cols):
            if v[pc]:
                f = v[pc]
                v = [x - f * y for x, y in zip(v, b)]
        pc = next((j for j in range(num_cols) if v[j]), None)
        if pc is None:
            continue
        p = v[pc]
        basis.append([x / p for x in v])
        basis_pivot_cols.append(pc)
        pivot_rows.append(r)
    r = len(pivot_rows)
    square = [[Fraction(cols[basis_pivot_cols[c]][pivot_rows[i]]) for c in range(r)] for i in range(r)]
    inv = _invert(square)
    return pivot_rows, basis_pivot_cols, inv


def _invert(m: list[list[Fraction]]) -> list[list[Fraction]]:
    n = len(m)
    a = [row[:] + [Fraction(1) if i == j else Fraction(0) for j in range(n)] for i, row in enumerate(m)]
    for col in range(n):
        piv = next(i for i in range(col, n) if a[i][col])
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for i in range(n):
            if i != col and a[i][col]:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[col])]
    return [row[n:] for row in a]


def lattice_points_direct(h: Hypergraph, t: int, cap: int = DEFAULT_GENERATOR_CAP) -> int:
    """Count lattice points of the t-dilate by direct membership tests.

    Candidates come from the exact bounding box of the dilate (per-coordinate
    Minkowski sums of the generators' minima and maxima), restricted to the
    span of the generators via triangular back-solving; each surviving point
    is tested by exact feasibility of its generator-coefficient system.
    """
    if t < 1:
        raise ValueError("dilation factor must be a positive integer")
    num_edges = len(h.edges)
    if num_edges > cap:
        raise BudgetExceededError(num_edges, cap, "direct lattice-point generator count")
    if num_edges == 0:
        return 1
    cols = edge_columns(h)
    ambient = comb(h.n, h.d)
    lo = [t * sum(min(0, c[r]) for c in cols) for r in range(ambient)]
    hi = [t * sum(max(0, c[r]) for c in cols) for r in range(ambient)]
    widths = [hi[r] - lo[r] for r in range(ambient)]
    pivot_rows, pivot_cols, inv = _row_parametrization(cols, ambient, widths)
    r = len(pivot_rows)

    bound_rows = []
    for e in range(num_edges):
        unit_pos = tuple(1 if j == e else 0 for j in range(num_edges))
        unit_neg = tuple(-1 if j == e else 0 for j in range(num_edges))
        bound_rows.append((unit_pos, 0))
        bound_rows.append((unit_neg, -t))

    count = 0
    ranges = [range(lo[p], hi[p] + 1) for p in pivot_rows]
    for x in product(*ranges):
        mu = [sum(inv[i][j] * x[j] for j in range(r)) for i in range(r)]
        point = []
        ok = True
        for row in range(ambient):
            val = sum(Fraction(cols[pivot_cols[c]][row]) * mu[c] for c in range(r))
            if val.denominator != 1:
                ok = False
                break
            v = int(val)
            if not lo[row] <= v <= hi[row]:
                ok = False
                break
            point.append(v)
        if not ok:
            continue
        eqs = [
            (tuple(cols[j][row] for j in range(num_edges)), point[row]) for row in range(ambient)
        ]
        if solve_feasibility(num_edges, eqs, bound_rows) is not None:
            count += 1
    return count


def _interpolate(points: list[tuple[int, int]], max_degree: int) -> list[Fraction]:
    """Coefficients (ascending) of the unique polynomial of degree <= max_degree
    through the given points, by Newton divided differences."""
    xs = [Fraction(x) for x, _ in points]
    divided = [Fraction(y) for _, y in points]
    n = len(points)
    for level in range(1, n):
        for i in range(n - 1, level - 1, -1):
            divided[i] = (divided[i] - divided[i - 1]) / (xs[i] - xs[i - level])
    coeffs = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        new = [Fraction(0)] * n
        new[0] = divided[i]
        for j in range(n - 1):
            new[j + 1] += coeffs[j]
            new[j] -= coeffs[j] * xs[i]
        coeffs = new
    return coeffs[: max_degree + 1]


def ehrhart_fit_check(h: Hypergraph, cap: int = DEFAULT_GENERATOR_CAP) -> OracleReport:
    """Interpolate direct dilate counts and compare against the census polynomial."""
    m = cycle_space_dim(h.n, h.d)
    points = [(t, lattice_points_direct(h, t, cap=cap)) for t in range(1, m + 2)]
    fitted = _interpolate(points, m)
    while len(fitted) > 1 and fitted[-1] == 0:
        fitted.pop()
    oracle_coeffs = tuple(int(c) if c.denominator == 1 else c for c in fitted)
    theorem_coeffs = ehrhart(h).coefficients
    return OracleReport.compare("ehrhart coefficients", theorem_coeffs, oracle_coeffs)


def signpattern_bruteforce(h: Hypergraph, cap: int = DEFAULT_PATTERN_CAP) -> set[SignPattern]:
    """All valid proper sign patterns, by scanning all 2**|E| candidates."""
    num_edges = len(h.edges)
    if num_edges > cap:
        raise BudgetExceededError(2 ** num_edges, 2 ** cap, "proper sign-pattern scan")
    out = set()
    for bits in range(2 ** num_edges):
        pattern = SignPattern(tuple(1 if bits >> j & 1 else -1 for j in range(num_edges)))
        if validity_check(h, pattern) is not None:
            out.add(pattern)
    return out


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        return -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def torsion_rowreduce(sel: SubcomplexSelection) -> int:
    """Torsion order by alternating extended-gcd column/row reduction.

    Column passes clear each pivot row, row passes clear each pivot column,
    repeating until a diagonal emerges; a final gcd sweep enforces the
    divisibility chain. Independent of the Smith-form implementation.
    """
    b = boundary_matrix(sel.parent)
    ambient = b.rows
    k = len(sel.chosen_edges)
    m = [[b.at(r, j) for j in sel.chosen_edges] for r in range(ambient)]
    t = 0
    while t < min(ambient, k):
        pos = None
        for j in range(t, k):
            for i in range(t, ambient):
                if m[i][j]:
                    pos = (i, j)
                    break
            if pos:
                break
        if pos is None:
            break
        if pos[0] != t:
            m[t], m[pos[0]] = m[pos[0]], m[t]
        if pos[1] != t:
            for row in m:
                row[t], row[pos[1]] = row[pos[1]], row[t]
        while True:
            for j in range(t + 1, k):
                if m[t][j]:
                    a, c = m[t][t], m[t][j]
                    if c % a == 0:
                        q = c // a
                        for i in range(t, ambient):
                            m[i][j] -= q * m[i][t]
                    else:
                        # Full 2x2 transform; strictly shrinks the pivot.
                        g, x, y = _xgcd(a, c)
                        a_, c_ = a // g, c // g
                        for i in range(t, ambient):
                            ci, cj = m[i][t], m[i][j]
                            m[i][t] = x * ci + y * cj
                            m[i][j] = -c_ * ci + a_ * cj
            for i in range(t + 1, ambient):
                if m[i][t]:
                    a, c = m[t][t], m[i][t]
                    row_t, row_i = m[t], m[i]
                    if c % a == 0:
                        q = c // a
                        for j in range(t, k):
                            row_i[j] -= q * row_t[j]
                    else:
                        g, x, y = _xgcd(a, c)
                        a_, c_ = a // g, c // g
                        for j in range(t, k):
                            rt, ri = row_t[j], row_i[j]
                            row_t[j] = x * rt + y * ri
                            row_i[j] = -c_ * rt + a_ * ri
            if all(m[t][j] == 0 for j in range(t + 1, k)) and all(
                m[i][t] == 0 for i in range(t + 1, ambient)
            ):
                break
        t += 1
    diag = [abs(m[i][i]) for i in range(min(ambient, k)) if m[i][i]]
    for i in range(len(diag)):  # gcd sweep: order the factors into a chain
        for j in range(i + 1, len(diag)):
            a, c = diag[i], diag[j]
            g = _xgcd(a, c)[0]
            diag[i], diag[j] = g, a * c // g
    order = 1
    for v in diag:
        order *= v
    return order

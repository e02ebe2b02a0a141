"""Exact rational feasibility of linear equality/inequality systems.

Callers encode open conditions ("> 0") as ">= 1" rows; for the homogeneous
systems built here that homogenization is sound and complete. Equalities are
eliminated first by integer forward echelon with content normalization. The
remaining inequality system is decided by Fourier-Motzkin elimination when it
has few variables, and by a phase-one simplex with exact rational pivots
(Bland's rule) above that. Both paths produce an exact witness on success.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Optional, Sequence

FM_VARIABLE_LIMIT = 12

_IntRow = tuple[tuple[int, ...], int]  # (coefficients, rhs), read as coeffs . x >= rhs


def solve_feasibility(
    n_vars: int,
    equalities: Sequence[tuple[Sequence, object]],
    inequalities: Sequence[tuple[Sequence, object]],
    fm_limit: int = FM_VARIABLE_LIMIT,
) -> Optional[list[Fraction]]:
    """Find x with coeffs.x == rhs for every equality and coeffs.x >= rhs for
    every inequality, or return None if no such x exists."""
    # Integer forward echelon of the equalities; each accepted row has a pivot
    # column unused by earlier rows and is content-normalized.
    echelon: list[tuple[list[int], int]] = []
    pivots: list[int] = []
    for coeffs, rhs in equalities:
        c, b = _as_int_row(coeffs, rhs)
        for (ec, eb), pc in zip(echelon, pivots):
            f = c[pc]
            if f:
                p = ec[pc]
                c = [p * x - f * y for x, y in zip(c, ec)]
                b = p * b - f * eb
                c, b = _content_reduce(c, b)
        if not any(c):
            if b:
                return None
            continue
        echelon.append((c, b))
        pivots.append(next(j for j in range(n_vars) if c[j]))
    pivot_set = set(pivots)
    free_vars = [j for j in range(n_vars) if j not in pivot_set]
    k = len(free_vars)

    reduced: list[_IntRow] = []
    for coeffs, rhs in inequalities:
        c, b = _as_int_row(coeffs, rhs)
        for (ec, eb), pc in zip(echelon, pivots):
            f = c[pc]
            if f:
                # scale by |pivot| so the inequality direction is preserved
                p = ec[pc]
                if p < 0:
                    p, ec, eb = -p, [-x for x in ec], -eb
                c = [p * x - f * y for x, y in zip(c, ec)]
                b = p * b - f * eb
                c, b = _content_reduce(c, b)
        acc = [c[j] for j in free_vars]
        if not any(acc):
            if b > 0:
                return None
            continue
        reduced.append(_primitive(acc, b))

    if not reduced:
        x_free: Optional[list[Fraction]] = [Fraction(0)] * k
    elif k <= fm_limit:
        x_free = _fourier_motzkin(k, reduced)
    else:
        x_free = _phase_one_simplex(k, reduced)
    if x_free is None:
        return None

    x: list = [Fraction(0)] * n_vars
    for pos, f in enumerate(free_vars):
        x[f] = x_free[pos]
    # Each echelon row is zero on all earlier pivots, so solving in reverse
    # order meets only already-assigned variables besides its own pivot.
    for (ec, eb), pc in reversed(list(zip(echelon, pivots))):
        rest = eb - sum(ec[j] * x[j] for j in range(n_vars) if j != pc and ec[j])
        x[pc] = Fraction(rest, ec[pc])
    return x


def _as_int_row(coeffs: Sequence, rhs) -> tuple[list[int], int]:
    if isinstance(rhs, int) and all(type(x) is int for x in coeffs):
        return list(coeffs), rhs
    fracs = [Fraction(x) for x in coeffs]
    frhs = Fraction(rhs)
    den = 1
    for x in fracs:
        den = den * x.denominator // gcd(den, x.denominator)
    den = den * frhs.denominator // gcd(den, frhs.denominator)
    return [int(x * den) for x in fracs], int(frhs * den)


def _content_reduce(coeffs: list[int], rhs: int) -> tuple[list[int], int]:
    g = 0
    for x in coeffs:
        g = gcd(g, x)
    g = gcd(g, rhs)
    if g > 1:
        return [x // g for x in coeffs], rhs // g
    return coeffs, rhs


def _primitive(coeffs: list[int], rhs: int) -> _IntRow:
    g = 0
    for x in coeffs:
        g = gcd(g, x)
    g = gcd(g, rhs)
    return tuple(x // g for x in coeffs), rhs // g


def _fourier_motzkin(k: int, rows: list[_IntRow]) -> Optional[list[Fraction]]:
    active: set[_IntRow] = set(rows)
    remaining = list(range(k))
    stack: list[tuple[int, list[_IntRow]]] = []
    while remaining:
        best_v = None
        best_score = None
        for v in remaining:
            pos = sum(1 for cs, _ in active if cs[v] > 0)
            neg = sum(1 for cs, _ in active if cs[v] < 0)
            score = pos * neg
            if best_score is None or score < best_score:
                best_v, best_score = v, score
        v = best_v
        pos_rows = [r for r in active if r[0][v] > 0]
        neg_rows = [r for r in active if r[0][v] < 0]
        new_active = {r for r in active if r[0][v] == 0}
        stack.append((v, pos_rows + neg_rows))
        for cp, bp in pos_rows:
            a = cp[v]
            for cn, bn in neg_rows:
                e = -cn[v]
                combo = [e * cp[j] + a * cn[j] for j in range(k)]
                rhs = e * bp + a * bn
                if not any(combo):
                    if rhs > 0:
                        return None
                    continue
                g = 0
                for x in combo:
                    g = gcd(g, x)
                g = gcd(g, rhs)
                new_active.add((tuple(x // g for x in combo), rhs // g))
        active = new_active
        remaining.remove(v)

    x: list[Optional[Fraction]] = [None] * k
    for v, vrows in reversed(stack):
        lo = None
        hi = None
        for cs, rhs in vrows:
            a = cs[v]
            rest = rhs - sum(cs[j] * x[j] for j in range(k) if j != v and cs[j])
            bound = Fraction(rest, a)
            if a > 0:
                lo = bound if lo is None else max(lo, bound)
            else:
                hi = bound if hi is None else min(hi, bound)
        if lo is not None:
            x[v] = lo
        elif hi is not None:
            x[v] = hi
        else:
            x[v] = Fraction(0)
    return x  # type: ignore[return-value]


def _phase_one_simplex(k: int, rows: list[_IntRow]) -> Optional[list[Fraction]]:
    """Feasibility of coeffs.x >= rhs over free x, by minimizing artificials.

    Variables are split x = u - w with u, w >= 0; each row gets a surplus and
    an artificial variable. Bland's rule guarantees termination; artificial
    columns are never re-admitted once they leave the basis.
    """
    m = len(rows)
    ncols = 2 * k + 2 * m
    tableau: list[list[Fraction]] = []
    for r_i, (coeffs, rhs) in enumerate(rows):
        sgn = 1 if rhs >= 0 else -1
        row = [Fraction(0)] * (ncols + 1)
        for j in range(k):
            row[j] = Fraction(sgn * coeffs[j])
            row[k + j] = Fraction(-sgn * coeffs[j])
        row[2 * k + r_i] = Fraction(-sgn)
        row[2 * k + m + r_i] = Fraction(1)
        row[ncols] = Fraction(sgn * rhs)
        tableau.append(row)
    basis = [2 * k + m + i for i in range(m)]
    z = [Fraction(0)] * (ncols + 1)
    for row in tableau:
        for j in range(ncols + 1):
            z[j] += row[j]
    for i in range(m):
        z[2 * k + m + i] = Fraction(0)

    nonartificial = 2 * k + m
    while True:
        enter = next((j for j in range(nonartificial) if z[j] > 0), None)
        if enter is None:
            break
        leave = None
        best = None
        for i in range(m):
            a = tableau[i][enter]
            if a > 0:
                ratio = tableau[i][ncols] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best = ratio
                    leave = i
        if leave is None:
            return None  # objective unbounded; cannot occur for phase one
        piv = tableau[leave][enter]
        tableau[leave] = [x / piv for x in tableau[leave]]
        pivot_row = tableau[leave]
        for i in range(m):
            if i != leave and tableau[i][enter]:
                f = tableau[i][enter]
                tableau[i] = [a - f * b for a, b in zip(tableau[i], pivot_row)]
        if z[enter]:
            f = z[enter]
            z = [a - f * b for a, b in zip(z, pivot_row)]
        basis[leave] = enter

    if z[ncols] != 0:
        return None
    x = [Fraction(0)] * k
    for i, b in enumerate(basis):
        val = tableau[i][ncols]
        if b < k:
            x[b] += val
        elif b < 2 * k:
            x[b - k] -= val
    return x

"""Spanning hyperforest/hypertree enumeration and derived zonotope statistics.

The enumerator walks edge subsets in lexicographic depth-first order,
maintaining a fraction-free (Bareiss) elimination state that is extended on
inclusion and popped on backtrack, so dependent columns prune whole subtrees.
The last pivot of a full reduction equals (up to sign) the determinant of the
pivot submatrix of the chosen columns; when it is +-1 the column lattice is
saturated and the torsion order is 1 without a Smith-form call.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterator, Optional

from .complexes import (
    Hypergraph,
    complete_hypergraph,
    cycle_space_dim,
    edge_columns,
)
from .errors import BudgetExceededError
from .exactalg import _invariant_factors
from .homology import SubcomplexSelection

DEFAULT_SUBSET_BUDGET = 2_000_000

Shard = tuple[int, int]  # (index, total)


@dataclass(frozen=True)
class EhrhartPolynomial:
    """Integer coefficients; index k holds the coefficient of t**k."""

    coefficients: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def evaluate(self, t: int) -> int:
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * t + c
        return acc

    @property
    def leading_coefficient(self) -> int:
        return self.coefficients[-1]


@dataclass
class CensusReport:
    """Torsion-weighted spanning hypertree statistics of one enumeration."""

    hypertree_count: int
    weighted_volume: int
    kalai_sum: int
    torsion_histogram: dict[int, int]

    @classmethod
    def from_histogram(cls, histogram: dict[int, int]) -> "CensusReport":
        count = sum(histogram.values())
        weighted = sum(order * c for order, c in histogram.items())
        squared = sum(order * order * c for order, c in histogram.items())
        return cls(count, weighted, squared, dict(sorted(histogram.items())))

    def merged(self, other: "CensusReport") -> "CensusReport":
        hist = dict(self.torsion_histogram)
        for order, c in other.torsion_histogram.items():
            hist[order] = hist.get(order, 0) + c
        return CensusReport.from_histogram(hist)

    def is_consistent(self) -> bool:
        return self == CensusReport.from_histogram(self.torsion_histogram)


def merge_census_reports(reports) -> CensusReport:
    merged = CensusReport.from_histogram({})
    for r in reports:
        merged = merged.merged(r)
    return merged


def _shard_prefix_length(num_edges: int, total: int) -> int:
    return min(num_edges, max(total - 1, 0).bit_length())


def _forest_nodes(
    cols, exact_size: Optional[int] = None, shard: Optional[Shard] = None
) -> Iterator[tuple[tuple[int, ...], int]]:
    """Yield (edge indices, last Bareiss pivot) for independent subsets.

    Preorder lexicographic DFS; with exact_size set, only subsets of that
    size are yielded and subtrees that cannot reach it are cut. With a shard
    (i, m), only subsets whose inclusion mask on the first ceil(log2 m) edges
    is congruent to i mod m are visited, so shards partition the stream.
    """
    num_edges = len(cols)
    ambient = len(cols[0]) if cols else 0
    pivrows: list[list[int]] = []
    pivpos: list[int] = []
    pivval: list[int] = []
    chosen: list[int] = []

    def try_reduce(vec) -> Optional[list[int]]:
        v = list(vec)
        prev = 1
        for idx in range(len(pivrows)):
            w = pivrows[idx]
            pp = pivpos[idx]
            pv = pivval[idx]
            coef = v[pp]
            if coef:
                v = [(pv * v[r] - coef * w[r]) // prev for r in range(ambient)]
            elif pv != prev:
                v = [(pv * v[r]) // prev for r in range(ambient)]
            prev = pv
        return v if any(v) else None

    def push(j: int) -> bool:
        reduced = try_reduce(cols[j])
        if reduced is None:
            return False
        pos = next(r for r in range(ambient) if reduced[r])
        pivrows.append(reduced)
        pivpos.append(pos)
        pivval.append(reduced[pos])
        chosen.append(j)
        return True

    def pop() -> None:
        pivrows.pop()
        pivpos.pop()
        pivval.pop()
        chosen.pop()

    def rec(start: int) -> Iterator[tuple[tuple[int, ...], int]]:
        size = len(chosen)
        if exact_size is None or size == exact_size:
            yield tuple(chosen), (pivval[-1] if pivval else 1)
            if exact_size is not None:
                return
        for j in range(start, num_edges):
            if exact_size is not None and size + (num_edges - j) < exact_size:
                break
            if push(j):
                yield from rec(j + 1)
                pop()

    if shard is None:
        yield from rec(0)
        return

    index, total = shard
    plen = _shard_prefix_length(num_edges, total)
    for mask in range(1 << plen):
        if mask % total != index:
            continue
        pushed = 0
        ok = True
        for j in range(plen):
            if mask >> j & 1:
                if push(j):
                    pushed += 1
                else:
                    ok = False
                    break
        if ok:
            yield from rec(plen)
        for _ in range(pushed):
            pop()


def _torsion_of(cols, chosen: tuple[int, ...]) -> int:
    ambient = len(cols[0])
    rows = [[cols[j][r] for j in chosen] for r in range(ambient)]
    prod = 1
    for f in _invariant_factors(rows, ambient, len(chosen)):
        if f:
            prod *= f
    return prod


def enumerate_spanning_hyperforests(
    h: Hypergraph, shard: Optional[Shard] = None
) -> Iterator[SubcomplexSelection]:
    """Every edge subset with independent boundary columns, exactly once."""
    cols = edge_columns(h)
    for chosen, _ in _forest_nodes(cols, shard=shard):
        yield SubcomplexSelection(h, chosen)


def ehrhart(
    h: Hypergraph, budget: int = DEFAULT_SUBSET_BUDGET, shard: Optional[Shard] = None
) -> EhrhartPolynomial:
    """Lattice-point counting polynomial of the hypergraphic zonotope.

    The coefficient of t**k is the sum of torsion orders over the k-edge
    spanning hyperforests.
    """
    bound = 2 ** len(h.edges)
    if bound > budget:
        raise BudgetExceededError(bound, budget, "hyperforest enumeration")
    cols = edge_columns(h)
    coeffs = [0] * (cycle_space_dim(h.n, h.d) + 1)
    for chosen, last_pivot in _forest_nodes(cols, shard=shard):
        torsion = 1 if last_pivot in (1, -1) else _torsion_of(cols, chosen)
        coeffs[len(chosen)] += torsion
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return EhrhartPolynomial(tuple(coeffs))


def volume(
    h: Hypergraph, budget: int = DEFAULT_SUBSET_BUDGET, shard: Optional[Shard] = None
) -> int:
    """Normalized volume: total torsion over spanning hypertrees (0 if none)."""
    m = cycle_space_dim(h.n, h.d)
    if len(h.edges) < m:
        return 0
    bound = comb(len(h.edges), m)
    if bound > budget:
        raise BudgetExceededError(bound, budget, "hypertree enumeration")
    cols = edge_columns(h)
    total = 0
    for chosen, last_pivot in _forest_nodes(cols, exact_size=m, shard=shard):
        total += 1 if last_pivot in (1, -1) else _torsion_of(cols, chosen)
    return total


def lattice_point_count(
    h: Hypergraph, budget: int = DEFAULT_SUBSET_BUDGET, shard: Optional[Shard] = None
) -> int:
    """Number of lattice points of the zonotope (Ehrhart value at t=1)."""
    return sum(ehrhart(h, budget=budget, shard=shard).coefficients)


def kalai_census(
    n: int, d: int, budget: int = DEFAULT_SUBSET_BUDGET, shard: Optional[Shard] = None
) -> CensusReport:
    """Enumerate all spanning hypertrees of the complete hypergraph.

    Groups them by torsion order; the squared-torsion total is the weighted
    hypertree count n**comb(n-2, d).
    """
    h = complete_hypergraph(n, d)
    m = cycle_space_dim(n, d)
    bound = comb(len(h.edges), m)
    if bound > budget:
        raise BudgetExceededError(bound, budget, f"hypertree census for n={n}, d={d}")
    cols = edge_columns(h)
    histogram: dict[int, int] = {}
    for chosen, last_pivot in _forest_nodes(cols, exact_size=m, shard=shard):
        torsion = 1 if last_pivot in (1, -1) else _torsion_of(cols, chosen)
        histogram[torsion] = histogram.get(torsion, 0) + 1
    return CensusReport.from_histogram(histogram)


def duality_volume_check(n: int, d: int, budget: int = DEFAULT_SUBSET_BUDGET) -> tuple[int, int]:
    """Volumes of the acyclohedra for dimensions d and n-d-2 (they agree)."""
    if n < d + 3:
        raise ValueError(f"duality needs n >= d+3, got n={n}, d={d}")
    dual_d = n - d - 2
    return (
        volume(complete_hypergraph(n, d), budget=budget),
        volume(complete_hypergraph(n, dual_d), budget=budget),
    )

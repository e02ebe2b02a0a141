"""Sign-pattern machinery for the face lattice of a hypergraphic zonotope.

A sign pattern assigns -1, 0 or +1 to every canonical (ascending) edge; its
value on a permuted vertex tuple picks up the sign of the permutation. A
pattern is valid when some cochain on the (d-1)-subsets has a coboundary with
exactly those signs; valid patterns ordered by refinement form the face
lattice, vertices being the proper (zero-free) ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterator, Optional, Sequence

from .complexes import (
    Hypergraph,
    complete_hypergraph,
    cycle_space_dim,
    edge_columns,
    permutation_sign,
)
from .errors import BudgetExceededError
from .exactalg import IntMatrix, rank
from .ratlp import solve_feasibility

DEFAULT_PATTERN_BUDGET = 1 << 20

Shard = tuple[int, int]


@dataclass(frozen=True)
class SignPattern:
    """Signs on the canonical edges, aligned with Hypergraph.edges order."""

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(v not in (-1, 0, 1) for v in self.values):
            raise ValueError("sign values must be -1, 0 or +1")

    @property
    def is_proper(self) -> bool:
        return 0 not in self.values

    def value_on(self, h: Hypergraph, vertices: Sequence[int]) -> int:
        """Value on an ordered vertex tuple: canonical value times permutation sign."""
        sign = permutation_sign(vertices)
        if sign == 0:
            raise ValueError(f"repeated vertices in {tuple(vertices)}")
        return sign * self.values[h.edge_position(vertices)]

    def refines(self, other: "SignPattern") -> bool:
        """True iff this pattern agrees with other wherever other is nonzero."""
        return all(o == 0 or s == o for s, o in zip(self.values, other.values))

    def zero_positions(self) -> tuple[int, ...]:
        return tuple(i for i, v in enumerate(self.values) if v == 0)

    def as_string(self) -> str:
        return "".join("+" if v > 0 else "-" if v < 0 else "0" for v in self.values)

    @classmethod
    def from_string(cls, text: str) -> "SignPattern":
        table = {"+": 1, "-": -1, "0": 0}
        try:
            return cls(tuple(table[c] for c in text))
        except KeyError as exc:
            raise ValueError(f"invalid sign character {exc.args[0]!r}") from None


@dataclass(frozen=True)
class Hypertournament:
    """Orientation of every edge of the complete hypergraph, relative to ascending order."""

    n: int
    d: int
    orientation: tuple[int, ...]

    def __post_init__(self) -> None:
        expected = comb(self.n, self.d + 1)
        if len(self.orientation) != expected:
            raise ValueError(f"expected {expected} orientations, got {len(self.orientation)}")
        if any(v not in (-1, 1) for v in self.orientation):
            raise ValueError("orientations must be -1 or +1")

    def sign_pattern(self) -> SignPattern:
        return SignPattern(self.orientation)


@dataclass(frozen=True)
class FaceDescriptor:
    """A face: its sign pattern, dimension, and a realizing cochain witness."""

    pattern: SignPattern
    dimension: int
    witness: tuple[Fraction, ...]


@lru_cache(maxsize=None)
def _support_rows(h: Hypergraph):
    """A set of linearly independent rows of the boundary matrix, plus each
    edge's column restricted to them.

    The pairings of a cochain with the edge boundaries sweep the whole row
    space already as the cochain ranges over these coordinates alone, so
    feasibility is decided over rank-many variables instead of comb(n, d),
    with the original sparse entries as coefficients.
    """
    cols = edge_columns(h)
    ambient = comb(h.n, h.d)
    num_edges = len(cols)
    support: list[int] = []
    reduced: list[list[Fraction]] = []
    for r in range(ambient):
        v = [Fraction(cols[j][r]) for j in range(num_edges)]
        for w in reduced:
            piv = next(i for i in range(num_edges) if w[i])
            if v[piv]:
                f = v[piv] / w[piv]
                v = [a - f * b for a, b in zip(v, w)]
        if any(v):
            reduced.append(v)
            support.append(r)
    restricted = tuple(tuple(cols[j][r] for r in support) for j in range(num_edges))
    return tuple(support), restricted


def _feasible_for_signs(h: Hypergraph, assigned) -> Optional[tuple[Fraction, ...]]:
    """Witness cochain for the partial sign assignment [(edge index, sign), ...].

    Zero signs become exact equalities; nonzero signs become homogenized
    strict inequalities ">= 1". Unlisted edges are unconstrained.
    """
    support, restricted = _support_rows(h)
    eqs = []
    ges = []
    for j, s in assigned:
        if s == 0:
            eqs.append((restricted[j], 0))
        else:
            ges.append((tuple(s * x for x in restricted[j]), 1))
    sol = solve_feasibility(len(support), eqs, ges)
    if sol is None:
        return None
    witness = [Fraction(0)] * comb(h.n, h.d)
    for r, z in zip(support, sol):
        witness[r] = z
    return tuple(witness)


def validity_check(h: Hypergraph, sigma: SignPattern) -> Optional[tuple[Fraction, ...]]:
    """Witness cochain whose coboundary has exactly sigma's signs, or None."""
    if len(sigma.values) != len(h.edges):
        raise ValueError(
            f"pattern covers {len(sigma.values)} edges, hypergraph has {len(h.edges)}"
        )
    return _feasible_for_signs(h, list(enumerate(sigma.values)))


def vertex_point(h: Hypergraph, sigma: SignPattern) -> tuple[int, ...]:
    """Lattice point of the vertex with the given proper pattern: the sum of
    the boundary columns of its positively signed edges."""
    cols = edge_columns(h)
    ambient = comb(h.n, h.d)
    return tuple(
        sum(cols[j][r] for j, s in enumerate(sigma.values) if s > 0) for r in range(ambient)
    )


def enumerate_vertices(
    h: Hypergraph, budget: int = DEFAULT_PATTERN_BUDGET, shard: Optional[Shard] = None
) -> Iterator[tuple[SignPattern, tuple[int, ...]]]:
    """All valid proper sign patterns with their lattice points, exactly once.

    Depth-first search over +-1 edge assignments with exact feasibility
    pruning at every partial assignment.
    """
    num_edges = len(h.edges)
    bound = 2 ** num_edges
    if bound > budget:
        raise BudgetExceededError(bound, budget, "vertex enumeration")
    signs: list[int] = []

    def rec() -> Iterator[tuple[SignPattern, tuple[int, ...]]]:
        if len(signs) == num_edges:
            pattern = SignPattern(tuple(signs))
            yield pattern, vertex_point(h, pattern)
            return
        for s in (1, -1):
            signs.append(s)
            if _feasible_for_signs(h, list(enumerate(signs))) is not None:
                yield from rec()
            signs.pop()

    if shard is None:
        yield from rec()
        return

    index, total = shard
    plen = min(num_edges, max(total - 1, 0).bit_length())
    for mask in range(1 << plen):
        if mask % total != index:
            continue
        signs.clear()
        for j in range(plen):
            signs.append(1 if mask >> j & 1 else -1)
        if _feasible_for_signs(h, list(enumerate(signs))) is not None:
            yield from rec()


def vertex_adjacency(h: Hypergraph, sigma1: SignPattern, sigma2: SignPattern) -> bool:
    """Whether two vertices share an edge: their patterns differ in exactly one place."""
    for sigma in (sigma1, sigma2):
        if not sigma.is_proper:
            raise ValueError("vertex patterns must be proper (no zeros)")
        if validity_check(h, sigma) is None:
            raise ValueError("vertex patterns must be valid")
    return sum(1 for a, b in zip(sigma1.values, sigma2.values) if a != b) == 1


class FaceLattice:
    """All valid sign patterns of a hypergraph, ordered by refinement.

    Refinement corresponds to reverse containment: the face of sigma is
    contained in the face of tau exactly when sigma refines tau.
    """

    def __init__(self, hypergraph: Hypergraph, faces: Sequence[FaceDescriptor]):
        self.hypergraph = hypergraph
        self.faces = tuple(sorted(faces, key=lambda f: (f.dimension, f.pattern.values)))

    def __len__(self) -> int:
        return len(self.faces)

    def __iter__(self):
        return iter(self.faces)

    def f_vector(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for f in self.faces:
            out[f.dimension] = out.get(f.dimension, 0) + 1
        return dict(sorted(out.items()))

    def contains(self, outer: FaceDescriptor, inner: FaceDescriptor) -> bool:
        """Whether inner's face is a (non-strict) subface of outer's face."""
        return inner.pattern.refines(outer.pattern)

    def vertices_of(self, face: FaceDescriptor) -> tuple[FaceDescriptor, ...]:
        return tuple(
            f for f in self.faces if f.pattern.is_proper and f.pattern.refines(face.pattern)
        )

    def full_face(self) -> FaceDescriptor:
        return next(f for f in self.faces if all(v == 0 for v in f.pattern.values))

    def facets(self) -> tuple[FaceDescriptor, ...]:
        target = cycle_space_dim(self.hypergraph.n, self.hypergraph.d) - 1
        return tuple(f for f in self.faces if f.dimension == target)


def _zero_set_dimension(h: Hypergraph, values: Sequence[int]) -> int:
    cols = edge_columns(h)
    zero_cols = [cols[j] for j, s in enumerate(values) if s == 0]
    ambient = comb(h.n, h.d)
    rows = [[c[r] for c in zero_cols] for r in range(ambient)]
    return rank(IntMatrix.from_rows(rows, cols=len(zero_cols)))


def face_lattice(h: Hypergraph, budget: int = DEFAULT_PATTERN_BUDGET) -> FaceLattice:
    """Every valid sign pattern with its dimension and witness, as a lattice."""
    num_edges = len(h.edges)
    bound = 3 ** num_edges
    if bound > budget:
        raise BudgetExceededError(bound, budget, "face enumeration")
    faces: list[FaceDescriptor] = []
    signs: list[int] = []

    def rec(witness: tuple[Fraction, ...]) -> None:
        if len(signs) == num_edges:
            pattern = SignPattern(tuple(signs))
            faces.append(FaceDescriptor(pattern, _zero_set_dimension(h, signs), witness))
            return
        for s in (1, -1, 0):
            signs.append(s)
            w = _feasible_for_signs(h, list(enumerate(signs)))
            if w is not None:
                rec(w)
            signs.pop()

    root = _feasible_for_signs(h, [])
    if root is not None:
        rec(root)
    return FaceLattice(h, faces)


def facets(h: Hypergraph, budget: int = DEFAULT_PATTERN_BUDGET) -> tuple[FaceDescriptor, ...]:
    """Faces one dimension below the top cycle-space dimension."""
    return face_lattice(h, budget=budget).facets()


def partition_pattern(n: int, d: int, parts: Sequence[Sequence[int]]) -> SignPattern:
    """Sign pattern induced by an ordered partition of 1..n into d+1 blocks.

    A transversal edge (one vertex per block) gets the sign of the permutation
    sorting its vertices by block index; every other edge gets zero.
    """
    blocks = [tuple(sorted(p)) for p in parts]
    if len(blocks) != d + 1:
        raise ValueError(f"expected {d + 1} blocks, got {len(blocks)}")
    if any(not b for b in blocks):
        raise ValueError("blocks must be nonempty")
    owner: dict[int, int] = {}
    for i, b in enumerate(blocks):
        for v in b:
            if v in owner:
                raise ValueError(f"vertex {v} appears in two blocks")
            owner[v] = i
    if set(owner) != set(range(1, n + 1)):
        raise ValueError("blocks must cover 1..n exactly")
    h = complete_hypergraph(n, d)
    vals = []
    for e in h.edges:
        labels = [owner[v] for v in e]
        vals.append(permutation_sign(labels) if len(set(labels)) == d + 1 else 0)
    return SignPattern(tuple(vals))


def is_acyclic_hypertournament(t: Hypertournament) -> bool:
    """Whether the tournament's cone misses every nonzero cycle.

    Equivalent to its proper sign pattern being valid, by hyperplane
    separation.
    """
    h = complete_hypergraph(t.n, t.d)
    return validity_check(h, t.sign_pattern()) is not None

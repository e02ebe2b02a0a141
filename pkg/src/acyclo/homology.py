"""Reduced homology diagnostics for edge selections.

Torsion orders, Betti numbers in the top two degrees, and the hyperforest /
spanning-hypertree predicates. A selection restricts the parent's boundary
matrix to a column subset; the ambient row set (the full lower skeleton)
never shrinks.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .complexes import Hypergraph, boundary_matrix, cycle_space_dim
from .exactalg import IntMatrix, rank, saturation_index


@dataclass(frozen=True)
class SubcomplexSelection:
    """A subset of the parent's edges, by index into Hypergraph.edges."""

    parent: Hypergraph
    chosen_edges: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(set(self.chosen_edges)) != len(self.chosen_edges):
            raise ValueError("chosen edge indices must be distinct")
        for i in self.chosen_edges:
            if not 0 <= i < len(self.parent.edges):
                raise ValueError(f"edge index {i} out of range")

    @classmethod
    def from_edge_sets(cls, parent: Hypergraph, edge_sets: Iterable[Iterable[int]]) -> "SubcomplexSelection":
        indices = sorted(parent.edge_position(e) for e in edge_sets)
        return cls(parent, tuple(indices))

    def edge_sets(self) -> tuple[tuple[int, ...], ...]:
        return tuple(self.parent.edges[i] for i in self.chosen_edges)


def restricted_boundary_matrix(sel: SubcomplexSelection) -> IntMatrix:
    """Boundary matrix restricted to the chosen edge columns (all rows kept)."""
    b = boundary_matrix(sel.parent)
    cols = sel.chosen_edges
    rows = [[b.at(r, j) for j in cols] for r in range(b.rows)]
    return IntMatrix.from_rows(rows, cols=len(cols))


def torsion_order(sel: SubcomplexSelection) -> int:
    """Order of the torsion part of the degree-(d-1) integral reduced homology.

    Since integer kernels are saturated, this is the saturation index of the
    restricted boundary matrix.
    """
    return saturation_index(restricted_boundary_matrix(sel))


def is_hyperforest(sel: SubcomplexSelection) -> bool:
    """True iff the boundary columns of the chosen edges are linearly independent."""
    return rank(restricted_boundary_matrix(sel)) == len(sel.chosen_edges)


def is_spanning_hypertree(sel: SubcomplexSelection) -> bool:
    """True iff the selection is a hyperforest with a full-rank edge count."""
    h = sel.parent
    return len(sel.chosen_edges) == cycle_space_dim(h.n, h.d) and is_hyperforest(sel)


def betti(sel: SubcomplexSelection, k: int) -> int:
    """Rational reduced Betti number in degree d-1 or d."""
    h = sel.parent
    if k == h.d - 1:
        return cycle_space_dim(h.n, h.d) - rank(restricted_boundary_matrix(sel))
    if k == h.d:
        return len(sel.chosen_edges) - rank(restricted_boundary_matrix(sel))
    raise ValueError(f"unsupported degree {k}: only {h.d - 1} and {h.d} are defined")

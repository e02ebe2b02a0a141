import random
from fractions import Fraction
from itertools import combinations, permutations
from math import comb, factorial

import pytest

from acyclo import (
    Hypergraph,
    Hypertournament,
    IntMatrix,
    SignPattern,
    coboundary_apply,
    complete_hypergraph,
    cycle_space_dim,
    enumerate_vertices,
    face_lattice,
    facets,
    is_acyclic_hypertournament,
    partition_pattern,
    permutation_sign,
    rank,
    validity_check,
    vertex_adjacency,
    vertex_point,
)
from acyclo.complexes import edge_columns
from acyclo.errors import BudgetExceededError
from acyclo.ratlp import solve_feasibility


def signs_of(values):
    return tuple(0 if v == 0 else (1 if v > 0 else -1) for v in values)


def assert_witness_realizes(h, pattern, witness):
    out = coboundary_apply(h, witness)
    assert signs_of(out) == pattern.values


def test_all_zero_pattern_valid(k34):
    w = validity_check(k34, SignPattern((0, 0, 0, 0)))
    assert w == (Fraction(0),) * 6


def test_k34_proper_patterns(k34):
    assert validity_check(k34, SignPattern((1, 1, 1, 1))) is not None
    assert validity_check(k34, SignPattern((1, -1, 1, -1))) is None
    assert validity_check(k34, SignPattern((-1, 1, -1, 1))) is None
    count = 0
    for bits in range(16):
        values = tuple(1 if bits >> j & 1 else -1 for j in range(4))
        if validity_check(k34, SignPattern(values)) is not None:
            count += 1
    assert count == 14


def test_witness_soundness(k34):
    for face in face_lattice(k34):
        assert_witness_realizes(k34, face.pattern, face.witness)


def test_vertices_k34(k34):
    verts = list(enumerate_vertices(k34))
    assert len(verts) == 14
    patterns = {p.values for p, _ in verts}
    assert len(patterns) == 14
    assert (1, -1, 1, -1) not in patterns
    for p, point in verts:
        assert point == vertex_point(k34, p)


def test_vertices_permutohedra():
    for n in (2, 3, 4):
        h = complete_hypergraph(n, 1)
        verts = list(enumerate_vertices(h))
        assert len(verts) == factorial(n)
        # each point, translated by (n-v) per coordinate v, is a permutation
        # of 0..n-1
        seen = set()
        for _, point in verts:
            shifted = tuple(point[v - 1] + (n - v) for v in range(1, n + 1))
            assert sorted(shifted) == list(range(n))
            seen.add(shifted)
        assert len(seen) == factorial(n)


def test_vertices_single_edge():
    h = Hypergraph(2, 1, ((1, 2),))
    verts = list(enumerate_vertices(h))
    assert len(verts) == 2
    points = {point for _, point in verts}
    assert points == {(0, 0), (-1, 1)}


def test_vertex_budget():
    with pytest.raises(BudgetExceededError):
        list(enumerate_vertices(complete_hypergraph(6, 2), budget=1000))


def test_vertex_shards_partition(k34):
    full = {p.values for p, _ in enumerate_vertices(k34)}
    for total in (2, 3):
        sharded = []
        for i in range(total):
            sharded.extend(p.values for p, _ in enumerate_vertices(k34, shard=(i, total)))
        assert len(sharded) == len(full)
        assert set(sharded) == full


def test_vertex_adjacency(k34):
    plus = SignPattern((1, 1, 1, 1))
    flip0 = SignPattern((-1, 1, 1, 1))
    assert vertex_adjacency(k34, plus, flip0)
    assert not vertex_adjacency(k34, plus, plus)
    flip01 = SignPattern((-1, -1, 1, 1))
    assert not vertex_adjacency(k34, plus, flip01)
    with pytest.raises(ValueError):
        vertex_adjacency(k34, plus, SignPattern((1, 1, 1, 0)))
    with pytest.raises(ValueError):
        vertex_adjacency(k34, plus, SignPattern((1, -1, 1, -1)))


def test_edge_count_k34(k34):
    verts = [p for p, _ in enumerate_vertices(k34)]
    count = sum(
        1
        for a, b in combinations(verts, 2)
        if sum(1 for x, y in zip(a.values, b.values) if x != y) == 1
    )
    assert count == 24


def test_face_lattice_k34(k34):
    lattice = face_lattice(k34)
    assert lattice.f_vector() == {0: 14, 1: 24, 2: 12, 3: 1}
    assert lattice.full_face().pattern.values == (0, 0, 0, 0)
    assert len(lattice.facets()) == 12
    # every facet of the rhombic dodecahedron is a combinatorial rhombus
    for f in lattice.facets():
        assert len(lattice.vertices_of(f)) == 4


def test_face_lattice_hexagon(k3):
    lattice = face_lattice(k3)
    assert lattice.f_vector() == {0: 6, 1: 6, 2: 1}


def test_face_lattice_single_edge():
    h = Hypergraph(2, 1, ((1, 2),))
    lattice = face_lattice(h)
    assert lattice.f_vector() == {0: 2, 1: 1}
    patterns = {f.pattern.values for f in lattice}
    assert patterns == {(-1,), (0,), (1,)}


def test_face_dimension_formula(k34):
    cols = edge_columns(k34)
    for face in face_lattice(k34):
        zero_cols = [cols[j] for j, v in enumerate(face.pattern.values) if v == 0]
        rows = [[c[r] for c in zero_cols] for r in range(6)]
        assert face.dimension == rank(IntMatrix.from_rows(rows, cols=len(zero_cols)))


def test_face_dimension_matches_affine_hull(k34, k3):
    for h in (k34, k3):
        lattice = face_lattice(h)
        for face in lattice:
            pts = [vertex_point(h, f.pattern) for f in lattice.vertices_of(face)]
            base = pts[0]
            diffs = [[p[i] - base[i] for i in range(len(base))] for p in pts[1:]]
            geo_dim = rank(IntMatrix.from_rows(diffs, cols=len(base))) if diffs else 0
            assert geo_dim == face.dimension


def test_lattice_coherence(k34):
    for h in (k34, complete_hypergraph(4, 1)):
        lattice = face_lattice(h)
        vsets = {f.pattern.values: frozenset(v.pattern.values for v in lattice.vertices_of(f)) for f in lattice}
        for a in lattice:
            for b in lattice:
                refines = a.pattern.refines(b.pattern)
                contained = vsets[a.pattern.values] <= vsets[b.pattern.values]
                assert refines == contained


def test_one_faces_join_adjacent_vertices(k34):
    lattice = face_lattice(k34)
    adjacent_pairs = set()
    for f in lattice:
        if f.dimension == 1:
            vs = lattice.vertices_of(f)
            assert len(vs) == 2
            a, b = (v.pattern.values for v in vs)
            assert sum(1 for x, y in zip(a, b) if x != y) == 1
            adjacent_pairs.add(frozenset((a, b)))
    verts = [p.values for p, _ in enumerate_vertices(k34)]
    hamming_pairs = {
        frozenset((a, b))
        for a, b in combinations(verts, 2)
        if sum(1 for x, y in zip(a, b) if x != y) == 1
    }
    assert adjacent_pairs == hamming_pairs


def test_facets_of_graphs():
    for n in (3, 4):
        h = complete_hypergraph(n, 1)
        fs = facets(h)
        assert len(fs) == 2 ** n - 2


def test_partition_patterns_d1():
    # ordered 2-part splits give exactly the facet patterns of the graph case
    n = 4
    h = complete_hypergraph(n, 1)
    facet_patterns = {f.pattern.values for f in facets(h)}
    part_patterns = set()
    for bits in range(1, 2 ** n - 1):
        a = [v for v in range(1, n + 1) if bits >> (v - 1) & 1]
        b = [v for v in range(1, n + 1) if not bits >> (v - 1) & 1]
        part_patterns.add(partition_pattern(n, 1, (a, b)).values)
    assert part_patterns == facet_patterns


def test_partition_pattern_transversal(k34):
    p = partition_pattern(4, 2, ((1,), (2,), (3, 4)))
    nonzero = {k34.edges[j] for j, v in enumerate(p.values) if v != 0}
    assert nonzero == {(1, 2, 3), (1, 2, 4)}
    assert p.values[k34.edge_position((1, 2, 3))] == 1
    assert p.values[k34.edge_position((1, 2, 4))] == 1


def test_partition_pattern_sign_convention():
    # d=1: a in first block, b in second: sign +1 on (a, b), -1 on (b, a)
    p = partition_pattern(3, 1, ((2,), (1, 3)))
    h = complete_hypergraph(3, 1)
    assert p.value_on(h, (2, 1)) == 1
    assert p.value_on(h, (1, 2)) == -1
    assert p.value_on(h, (2, 3)) == 1


def test_all_ordered_partitions_valid_k34(k34):
    count = 0
    for parts in ordered_partitions(4, 3):
        pattern = partition_pattern(4, 2, parts)
        count += 1
        assert validity_check(k34, pattern) is not None
    assert count == 36


def ordered_partitions(n, blocks):
    out = []

    def assign(v, acc):
        if v > n:
            if all(acc):
                out.append([list(b) for b in acc])
            return
        for b in acc:
            b.append(v)
            assign(v + 1, acc)
            b.pop()

    assign(1, [[] for _ in range(blocks)])
    return out


def test_partition_pattern_validation():
    with pytest.raises(ValueError):
        partition_pattern(4, 2, ((1, 2), (3, 4)))
    with pytest.raises(ValueError):
        partition_pattern(4, 1, ((1, 2), (2, 3, 4)))
    with pytest.raises(ValueError):
        partition_pattern(4, 1, ((1, 2), (4,)))


def test_a52_exceptional_facet():
    h = complete_hypergraph(5, 2)
    values = [0] * 10
    for i in range(5):
        tup = (i % 5 + 1, (i + 1) % 5 + 1, (i + 2) % 5 + 1)
        values[h.edge_position(tup)] = permutation_sign(tup)
    pattern = SignPattern(tuple(values))
    witness = validity_check(h, pattern)
    assert witness is not None
    assert_witness_realizes(h, pattern, witness)
    cols = edge_columns(h)
    zero_cols = [cols[j] for j, v in enumerate(pattern.values) if v == 0]
    rows = [[c[r] for c in zero_cols] for r in range(comb(5, 2))]
    dim = rank(IntMatrix.from_rows(rows, cols=len(zero_cols)))
    assert dim == cycle_space_dim(5, 2) - 1 == 5


def test_a52_regression_counts():
    # frozen after first verified enumeration: 544 vertices (the acyclic
    # 2-hypertournaments on 5 vertices) and 74 facets, of which 50 are
    # partition-induced and the other 24 are cyclic mod-5 patterns
    h = complete_hypergraph(5, 2)
    verts = list(enumerate_vertices(h))
    assert len(verts) == 544
    fs = facets(h)
    facet_patterns = {f.pattern.values for f in fs}
    assert len(facet_patterns) == 74
    induced = set()
    for parts in ordered_partitions(5, 3):
        induced.add(partition_pattern(5, 2, parts).values)
    assert len(facet_patterns & induced) == 50
    cyclic = set()
    for perm in permutations(range(1, 6)):
        values = [0] * 10
        for i in range(5):
            tup = (perm[i % 5], perm[(i + 1) % 5], perm[(i + 2) % 5])
            values[h.edge_position(tup)] = permutation_sign(tup)
        cyclic.add(tuple(values))
    assert facet_patterns - induced <= cyclic
    assert len(facet_patterns - induced) == 24


def test_sign_pattern_value_on_permuted(k34):
    p = SignPattern((1, -1, 0, 1))
    assert p.value_on(k34, (1, 2, 3)) == 1
    assert p.value_on(k34, (2, 1, 3)) == -1
    assert p.value_on(k34, (2, 3, 1)) == 1
    assert p.value_on(k34, (1, 2, 4)) == -1
    assert p.value_on(k34, (1, 3, 4)) == 0
    with pytest.raises(ValueError):
        p.value_on(k34, (1, 1, 2))


def test_sign_pattern_strings():
    p = SignPattern.from_string("+-0")
    assert p.values == (1, -1, 0)
    assert p.as_string() == "+-0"
    with pytest.raises(ValueError):
        SignPattern.from_string("+x")


def test_tournament_d1():
    # transitive orientation from a total order is acyclic
    k3 = complete_hypergraph(3, 1)
    transitive = Hypertournament(3, 1, (1, 1, 1))
    assert is_acyclic_hypertournament(transitive)
    # directed 3-cycle 1->2->3->1: sign -1 on canonical (1,3)
    cycle = Hypertournament(3, 1, (1, -1, 1))
    assert not is_acyclic_hypertournament(cycle)


def test_tournament_d2_n4():
    acyclic = 0
    for bits in range(16):
        orientation = tuple(1 if bits >> j & 1 else -1 for j in range(4))
        t = Hypertournament(4, 2, orientation)
        if is_acyclic_hypertournament(t):
            acyclic += 1
        else:
            assert orientation in ((1, -1, 1, -1), (-1, 1, -1, 1))
    assert acyclic == 14


def test_tournament_validation():
    with pytest.raises(ValueError):
        Hypertournament(4, 2, (1, 1, 1))
    with pytest.raises(ValueError):
        Hypertournament(4, 2, (1, 1, 0, 1))


def test_face_budget():
    with pytest.raises(BudgetExceededError):
        face_lattice(complete_hypergraph(6, 2), budget=10)


def test_validity_on_k62(k62):
    valid = partition_pattern(6, 2, ((1, 2), (3, 4), (5, 6)))
    witness = validity_check(k62, valid)
    assert witness is not None
    assert_witness_realizes(k62, valid, witness)
    # alternating signs on the tetrahedron spanned by 1..4, zero elsewhere:
    # the boundary relation among those four columns forbids any witness
    values = [0] * 20
    tetra = [(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)]
    for sign, e in zip((1, -1, 1, -1), tetra):
        values[k62.edge_position(e)] = sign
    assert validity_check(k62, SignPattern(tuple(values))) is None


def test_simplex_path_on_k72():
    # rank 15 cochain variables: above the Fourier-Motzkin limit, so these
    # route through the exact phase-one simplex
    h7 = complete_hypergraph(7, 2)
    valid = partition_pattern(7, 2, ((1, 2, 3), (4, 5), (6, 7)))
    witness = validity_check(h7, valid)
    assert witness is not None
    assert_witness_realizes(h7, valid, witness)
    values = [0] * 35
    tetra = [(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)]
    for sign, e in zip((1, -1, 1, -1), tetra):
        values[h7.edge_position(e)] = sign
    assert validity_check(h7, SignPattern(tuple(values))) is None


def test_fm_and_simplex_agree():
    rng = random.Random(41)
    for _ in range(60):
        nv = rng.randint(1, 4)
        eqs = []
        ges = []
        for _ in range(rng.randint(0, 2)):
            eqs.append(([rng.randint(-3, 3) for _ in range(nv)], 0))
        for _ in range(rng.randint(1, 4)):
            ges.append(([rng.randint(-3, 3) for _ in range(nv)], rng.randint(-2, 2)))
        via_fm = solve_feasibility(nv, eqs, ges, fm_limit=12)
        via_simplex = solve_feasibility(nv, eqs, ges, fm_limit=0)
        assert (via_fm is None) == (via_simplex is None)
        for sol in (via_fm, via_simplex):
            if sol is not None:
                for coeffs, rhs in eqs:
                    assert sum(c * x for c, x in zip(coeffs, sol)) == rhs
                for coeffs, rhs in ges:
                    assert sum(c * x for c, x in zip(coeffs, sol)) >= rhs

import random
from itertools import combinations
from math import comb

import pytest

from acyclo import (
    BudgetExceededError,
    CensusReport,
    Hypergraph,
    SubcomplexSelection,
    complete_hypergraph,
    cycle_space_dim,
    duality_volume_check,
    ehrhart,
    enumerate_spanning_hyperforests,
    kalai_census,
    kirchhoff_tree_count,
    lattice_point_count,
    merge_census_reports,
    rank,
    restricted_boundary_matrix,
    torsion_order,
    volume,
)
from conftest import random_connected_graph


def brute_force_forests(h):
    """Independent edge subsets by direct rank checks (oracle for the DFS)."""
    out = []
    m = len(h.edges)
    for k in range(m + 1):
        for subset in combinations(range(m), k):
            sel = SubcomplexSelection(h, subset)
            if rank(restricted_boundary_matrix(sel)) == k:
                out.append(subset)
    return out


def test_enumerate_k34(k34):
    got = [sel.chosen_edges for sel in enumerate_spanning_hyperforests(k34)]
    assert len(got) == 15
    assert sorted(got) == sorted(brute_force_forests(k34))
    assert len(set(got)) == 15


def test_enumerate_k3(k3):
    got = [sel.chosen_edges for sel in enumerate_spanning_hyperforests(k3)]
    assert len(got) == 7
    assert sorted(got) == sorted(brute_force_forests(k3))


def test_enumerate_empty_hypergraph():
    h = Hypergraph(3, 1, ())
    assert [sel.chosen_edges for sel in enumerate_spanning_hyperforests(h)] == [()]


def test_enumeration_order_is_lexicographic_preorder(k3):
    got = [sel.chosen_edges for sel in enumerate_spanning_hyperforests(k3)]
    assert got == [(), (0,), (0, 1), (0, 2), (1,), (1, 2), (2,)]


def test_ehrhart_k3(k3):
    assert ehrhart(k3).coefficients == (1, 3, 3)


def test_ehrhart_k34(k34):
    assert ehrhart(k34).coefficients == (1, 4, 6, 4)


def test_ehrhart_single_edge():
    h = Hypergraph(2, 1, ((1, 2),))
    poly = ehrhart(h)
    assert poly.coefficients == (1, 1)
    assert poly.evaluate(3) == 4


def test_ehrhart_constant_term_one():
    rng = random.Random(23)
    for _ in range(10):
        g = random_connected_graph(rng, 6)
        poly = ehrhart(g)
        assert poly.coefficients[0] == 1
        assert all(c >= 0 for c in poly.coefficients)
        assert poly.degree <= cycle_space_dim(g.n, g.d)


def test_volume_complete_graphs():
    for n, want in [(3, 3), (4, 16), (5, 125)]:
        assert volume(complete_hypergraph(n, 1)) == want


def test_volume_k34(k34):
    assert volume(k34) == 4


def test_volume_no_spanning_hypertree():
    h = Hypergraph(4, 1, ((1, 2), (3, 4)))
    assert volume(h) == 0
    h2 = Hypergraph(5, 2, ((1, 2, 3), (1, 2, 4)))
    assert volume(h2) == 0


def test_volume_three_ways():
    for h in (complete_hypergraph(4, 2), complete_hypergraph(5, 2)):
        poly = ehrhart(h)
        m = cycle_space_dim(h.n, h.d)
        lead = poly.coefficients[m] if poly.degree == m else 0
        total = sum(
            torsion_order(sel)
            for sel in enumerate_spanning_hyperforests(h)
            if len(sel.chosen_edges) == m
        )
        assert volume(h) == lead == total


def test_volume_matches_kirchhoff():
    rng = random.Random(99)
    for _ in range(20):
        g = random_connected_graph(rng)
        assert volume(g) == kirchhoff_tree_count(g)


def test_lattice_point_counts(k3, k34):
    assert lattice_point_count(k3) == 7
    assert lattice_point_count(k34) == 15
    assert lattice_point_count(Hypergraph(2, 1, ((1, 2),))) == 2


def test_kalai_census_values():
    for (n, d), want in [((4, 2), 4), ((5, 2), 125), ((5, 3), 5), ((6, 4), 6)]:
        report = kalai_census(n, d)
        assert report.kalai_sum == want == n ** comb(n - 2, d)
        assert report.is_consistent()
        assert report.weighted_volume >= report.hypertree_count
        assert report.kalai_sum >= report.weighted_volume


def test_kalai_census_4_2_counts():
    report = kalai_census(4, 2)
    assert report.hypertree_count == 4
    assert report.weighted_volume == 4
    assert report.torsion_histogram == {1: 4}


def test_census_budget_guard():
    with pytest.raises(BudgetExceededError) as exc:
        kalai_census(7, 2, budget=1000)
    assert exc.value.bound == comb(35, 15)


def test_ehrhart_budget_guard(k62):
    with pytest.raises(BudgetExceededError):
        ehrhart(k62, budget=100)


def test_duality_checks():
    assert duality_volume_check(5, 1) == (125, 125)
    assert duality_volume_check(4, 1) == (16, 16)
    assert duality_volume_check(6, 1) == (1296, 1296)
    assert duality_volume_check(7, 1) == (16807, 16807)
    v1, v2 = duality_volume_check(6, 2, budget=2_000_000)
    assert v1 == v2
    with pytest.raises(ValueError):
        duality_volume_check(4, 2)


def test_kalai_census_dual_dimensions():
    # duals of the graph cases: all torsion-free, counts n**(n-2)
    for (n, d), want in [((6, 3), 1296), ((7, 4), 16807)]:
        report = kalai_census(n, d)
        assert report.kalai_sum == want == n ** comb(n - 2, d)
        assert report.torsion_histogram == {1: want}


def test_a62_ehrhart_regression(k62):
    # frozen after first verified enumeration; structural cross-checks:
    # the t^k coefficient for k <= 3 counts all k-subsets (independent),
    # the t^4 deficit is the 15 sub-tetrahedron relations, and the leading
    # coefficient is the torsion-weighted hypertree count
    poly = ehrhart(k62)
    assert poly.coefficients == (
        1, 20, 190, 1140, 4830, 15264, 36900, 68400, 94800, 90720, 46632,
    )
    assert poly.coefficients[2] == comb(20, 2)
    assert poly.coefficients[3] == comb(20, 3)
    assert comb(20, 4) - poly.coefficients[4] == comb(6, 4)
    assert poly.leading_coefficient == 46632
    assert poly.evaluate(1) == lattice_point_count(k62) == 358897


def test_census_report_merge():
    a = CensusReport.from_histogram({1: 3, 2: 1})
    b = CensusReport.from_histogram({1: 2})
    merged = a.merged(b)
    assert merged.hypertree_count == 6
    assert merged.weighted_volume == 3 + 2 + 2
    assert merged.kalai_sum == 3 + 4 + 2
    assert merged.torsion_histogram == {1: 5, 2: 1}


def test_sharded_census_merges_to_full():
    full = kalai_census(5, 2)
    for total in (2, 3, 4):
        parts = [kalai_census(5, 2, shard=(i, total)) for i in range(total)]
        assert merge_census_reports(parts) == full


def test_sharded_ehrhart_merges_to_full(k34):
    full = ehrhart(k34).coefficients
    for total in (2, 3):
        coeff_sum = [0] * len(full)
        for i in range(total):
            part = ehrhart(k34, shard=(i, total)).coefficients
            for k, c in enumerate(part):
                coeff_sum[k] += c
        assert tuple(coeff_sum) == full


def test_shard_partition_of_forests(k34):
    all_forests = [sel.chosen_edges for sel in enumerate_spanning_hyperforests(k34)]
    sharded = []
    for i in range(3):
        sharded.extend(
            sel.chosen_edges for sel in enumerate_spanning_hyperforests(k34, shard=(i, 3))
        )
    assert sorted(sharded) == sorted(all_forests)

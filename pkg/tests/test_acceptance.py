"""End-to-end separation results on the named graph families."""

from __future__ import annotations

import os
import time
from pathlib import Path

import numpy as np
import pytest

from loopy_wl.application.services import SweepService
from loopy_wl.domain.cactus import canonical_tree_decomposition, td_canonical_code, validate_tree_decomposition
from loopy_wl.domain.generators import (
    gen_cfi,
    gen_chordal_pair,
    gen_csl,
    gen_cycle,
    gen_fan_cactus,
    gen_path,
    gen_random_cactus,
    gen_random_graph,
    gen_random_sparse,
    gen_two_triangles_bridge,
)
from loopy_wl.domain.graphs import Graph, VertexPermutation, permute
from loopy_wl.domain.oracles import (
    cycle_pattern,
    hom_count,
    hom_profile,
    is_subgraph_gnn_countable,
    rooted_sub_cycle,
    spasm,
    sub_count,
)
from loopy_wl.domain.paths import precompute_all
from loopy_wl.domain.refinement import (
    MethodId,
    MethodSpec,
    compare_graphs,
    invariant_fingerprint,
    loopy_refine,
    minimal_distinguishing_r,
    same_partition,
    wl1_refine,
)
from loopy_wl.infrastructure.io import load_graphs
from loopy_wl.infrastructure.io.datasets import load_fixture

from .conftest import DATA_DIR

WL1 = MethodSpec(MethodId.WL1)
GRAPH8C_PAIRS_UNDER_WL1 = 312


def loopy(r: int) -> MethodSpec:
    return MethodSpec(MethodId.LOOPY, r=r)


def _graph8c_path() -> Path | None:
    candidate = os.getenv("LOOPY_WL_GRAPH8C")
    path = Path(candidate) if candidate else DATA_DIR / "graph8c.g6"
    return path if path.exists() else None


@pytest.mark.dataset
def test_graph8c_sweep():
    path = _graph8c_path()
    if path is None:
        pytest.skip("graph8c.g6 not available")
    graphs = load_graphs(path)
    service = SweepService()
    baseline = service.sweep(graphs, WL1, dataset_id="graph8c")
    assert baseline.indistinguishable_pairs == GRAPH8C_PAIRS_UNDER_WL1
    for r in (1, 2):
        assert service.sweep(graphs, loopy(r), dataset_id="graph8c").indistinguishable_pairs < baseline.indistinguishable_pairs


@pytest.mark.slow
def test_strongly_regular_pair_needs_long_paths(shrikhande, rook):
    assert not compare_graphs(shrikhande, rook, WL1).distinguished
    assert not compare_graphs(shrikhande, rook, MethodSpec(MethodId.KWL, k=3)).distinguished
    for r in range(6):
        assert not compare_graphs(shrikhande, rook, loopy(r)).distinguished
    assert compare_graphs(shrikhande, rook, loopy(6)).distinguished
    assert minimal_distinguishing_r(shrikhande, rook, 6) == 6


def test_circulant_skip_link_pair():
    left, right = gen_csl(41, 2), gen_csl(41, 3)
    assert not compare_graphs(left, right, WL1).distinguished
    assert minimal_distinguishing_r(left, right, 3) == 1


@pytest.mark.parametrize("r", range(5))
def test_chordal_pair_hierarchy(r):
    left, right = gen_chordal_pair(r)
    assert minimal_distinguishing_r(left, right, r + 1) == r + 1


def test_cfi_pair_over_two_triangles():
    base = gen_two_triangles_bridge()
    plain, twisted = gen_cfi(base), gen_cfi(base, twisted=True)
    assert not compare_graphs(plain, twisted, WL1).distinguished
    assert compare_graphs(plain, twisted, loopy(1)).distinguished
    assert hom_count(base, plain).value > hom_count(base, twisted).value


def test_supplied_cfi_fixture_pair():
    graphs = load_fixture("cfi_two_triangles.g6")
    if graphs is None:
        pytest.skip("LOOPY_WL_FIXTURES does not provide cfi_two_triangles.g6")
    plain, twisted = graphs[:2]
    assert not compare_graphs(plain, twisted, WL1).distinguished
    assert compare_graphs(plain, twisted, loopy(1)).distinguished


def test_cycle_counts_match_the_oracle_on_sparse_graphs():
    for seed in range(6):
        g = gen_random_sparse(23, 2.2, seed)
        pn = precompute_all(g, 5)
        for length in range(3, 8):
            assert pn.total_paths(length - 2) == sub_count(cycle_pattern(length), g).value


def _square_with_pendant() -> Graph:
    return Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)])


def test_equivalent_graphs_share_short_cycle_cactus_counts():
    left, right = gen_chordal_pair(2)
    assert not compare_graphs(left, right, loopy(2)).distinguished
    for pattern in (gen_cycle(4), _square_with_pendant(), Graph.from_edges(3, [(0, 1), (1, 2)])):
        assert hom_count(pattern, left).value == hom_count(pattern, right).value
    assert hom_count(gen_cycle(5), left).value == 0
    assert hom_count(gen_cycle(5), right).value == 20


def test_subgraph_counts_follow_spasm_hom_counts():
    left, right = gen_chordal_pair(2)
    pattern = gen_cycle(4)
    assert is_subgraph_gnn_countable(pattern)
    for member in spasm(pattern):
        assert hom_count(member, left).value == hom_count(member, right).value
    assert sub_count(pattern, left).value == sub_count(pattern, right).value


@pytest.mark.slow
def test_strongly_regular_pair_shares_square_counts(shrikhande, rook):
    assert sub_count(gen_cycle(4), shrikhande).value == sub_count(gen_cycle(4), rook).value


def test_zero_loopy_matches_colour_refinement_on_random_graphs():
    rng = np.random.default_rng(0)
    for index in range(200):
        n = int(rng.integers(1, 31))
        g = gen_random_graph(n, float(rng.uniform(0.05, 0.5)), index)
        assert same_partition(wl1_refine(g).stable.colors, loopy_refine(g, None, 0).stable.colors)


@pytest.mark.slow
def test_cycle_identities_on_random_graphs():
    rng = np.random.default_rng(1)
    for index in range(200):
        g = gen_random_graph(int(rng.integers(3, 21)), 0.2, index)
        pn = precompute_all(g, 6)
        for length in range(3, 9):
            q = length - 2
            assert pn.total_paths(q) == sub_count(cycle_pattern(length), g).value
            for v in range(g.n):
                assert pn.size(v, q) == rooted_sub_cycle(g, v, length).value


@pytest.mark.parametrize("r", [1, 2])
def test_equivalent_pair_shares_cactus_hom_counts(r):
    left, right = gen_chordal_pair(r)
    assert not compare_graphs(left, right, loopy(r)).distinguished
    patterns = []
    seed = 0
    while len(patterns) < 50:
        pattern = gen_random_cactus(5 + seed % 4, r + 2, seed)
        seed += 1
        if pattern.n <= 8:
            patterns.append(pattern)
    assert {pattern.n for pattern in patterns} >= {6, 7, 8}
    for pattern in patterns:
        assert hom_count(pattern, left).value == hom_count(pattern, right).value


def test_fixture_cfi_hom_targets():
    graphs = load_fixture("cfi_two_triangles.g6")
    if graphs is None:
        pytest.skip("LOOPY_WL_FIXTURES does not provide cfi_two_triangles.g6")
    base = gen_two_triangles_bridge()
    assert (hom_count(base, graphs[0]).value, hom_count(base, graphs[1]).value) == (68, 34)


@pytest.mark.slow
def test_canonical_decompositions_on_many_cacti():
    for seed in range(100):
        fan, root = gen_fan_cactus(4 + seed % 20, 3 + seed % 5, 0.5, seed)
        for g in (gen_random_cactus(4 + seed % 20, 3 + seed % 5, seed), fan):
            td = canonical_tree_decomposition(g, root)
            assert validate_tree_decomposition(g, td).valid
            assert td.width <= 2
            assert {len(bag) for bag in td.bags} <= {1, 2, 3}
            sigma = VertexPermutation.random(g.n, seed)
            h = permute(g, sigma)
            assert td_canonical_code(td, g) == td_canonical_code(canonical_tree_decomposition(h, sigma(root)), h)


@pytest.mark.parametrize(
    "pattern, chordal_orders, strongly_regular_agrees",
    [
        (gen_path(4), (1, 2, 3, 4), True),
        (gen_cycle(4), (2, 3, 4), True),
        (gen_two_triangles_bridge(), (1, 2, 3, 4), False),
    ],
    ids=["P4", "C4", "two-triangles-bridge"],
)
def test_spasm_hom_agreement_implies_sub_agreement(
    pattern, chordal_orders, strongly_regular_agrees, shrikhande, rook
):
    members = spasm(pattern)
    pairs = [gen_chordal_pair(r) for r in range(1, 5)]
    pairs.append((shrikhande, rook))
    pairs.append((gen_cfi(gen_two_triangles_bridge()), gen_cfi(gen_two_triangles_bridge(), twisted=True)))
    pairs.extend((gen_random_graph(7, 0.45, seed), gen_random_graph(7, 0.45, 100 + seed)) for seed in range(10))

    agreeing = 0
    for g, h in pairs:
        if hom_profile(members, g) == hom_profile(members, h):
            agreeing += 1
            assert sub_count(pattern, g).value == sub_count(pattern, h).value

    for r in chordal_orders:
        left, right = gen_chordal_pair(r)
        assert hom_profile(members, left) == hom_profile(members, right)
    if strongly_regular_agrees:
        assert hom_profile(members, shrikhande) == hom_profile(members, rook)
        assert sub_count(pattern, shrikhande).value > 0
    assert agreeing >= len(chordal_orders) + int(strongly_regular_agrees)


@pytest.mark.slow
def test_precomputation_cost_stays_near_edge_count():
    graphs = [gen_random_sparse(23, 2.2, seed) for seed in range(1000)]
    started = time.perf_counter()
    total_paths = sum(precompute_all(g, 5).total_paths() for g in graphs)
    elapsed = time.perf_counter() - started
    total_edges = sum(g.m for g in graphs)
    assert elapsed < 30
    assert total_paths <= 10 * total_edges


@pytest.mark.slow
def test_fingerprints_survive_many_relabellings():
    corpus = [gen_random_graph(8, 0.4, seed) for seed in range(30)]
    methods = [WL1, loopy(1), loopy(2), MethodSpec(MethodId.KWL, k=2)]
    for g in corpus:
        for method in methods:
            reference = invariant_fingerprint(g, method)
            for seed in range(100):
                moved = permute(g, VertexPermutation.random(g.n, seed))
                assert invariant_fingerprint(moved, method) == reference

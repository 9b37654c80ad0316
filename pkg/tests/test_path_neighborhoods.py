from __future__ import annotations

from collections import Counter

import pytest

from loopy_wl.domain.generators import gen_random_sparse
from loopy_wl.domain.graphs import VertexOutOfRangeError, VertexPermutation, permute
from loopy_wl.domain.oracles import cycle_pattern, rooted_sub_cycle, sub_count
from loopy_wl.domain.paths import (
    NeighborhoodMismatchError,
    OrientedPath,
    PathBudgetExceededError,
    count_cycles_through,
    enumerate_neighborhood,
    neighborhood_statistics,
    precompute_all,
)

from .conftest import random_corpus


def test_enumerate_on_c5(c5):
    assert enumerate_neighborhood(c5, 0, 1) == []
    assert [p.nodes for p in enumerate_neighborhood(c5, 0, 3)] == [(1, 2, 3, 4), (4, 3, 2, 1)]


def test_enumerate_on_k4_lists_all_orderings(k4):
    paths = [p.nodes for p in enumerate_neighborhood(k4, 0, 2)]
    assert paths == sorted(paths)
    assert sorted(paths) == sorted(
        [(1, 2, 3), (1, 3, 2), (2, 1, 3), (2, 3, 1), (3, 1, 2), (3, 2, 1)]
    )


def test_enumerate_validates_arguments(c5):
    with pytest.raises(VertexOutOfRangeError):
        enumerate_neighborhood(c5, 5, 1)
    with pytest.raises(ValueError):
        enumerate_neighborhood(c5, 0, 0)


def test_oriented_path_helpers():
    path = OrientedPath((3, 1, 2))
    assert path.length == 2
    assert path.reversed().nodes == (2, 1, 3)


def test_trees_have_empty_neighbourhoods():
    for seed in range(5):
        tree = gen_random_sparse(15, 1.0, seed)
        assert tree.m == tree.n - 1
        assert precompute_all(tree, 5).total_paths() == 0


def test_triangle_free_graph_has_no_short_loops(c6_chord):
    pn = precompute_all(c6_chord, 1)
    assert all(pn.size(v, 1) == 0 for v in range(c6_chord.n))


def test_k4_sizes(k4):
    pn = precompute_all(k4, 2)
    for v in range(4):
        assert pn.size(v, 0) == 3
        assert pn.size(v, 1) == 6
        assert pn.size(v, 2) == 6
    assert pn.counts_by_length() == {1: 24, 2: 24}
    assert pn.message_cost() == 6 + 2 * 24 + 4 * 24


def test_stored_paths_satisfy_the_neighbourhood_conditions(small_random_graphs):
    for g in small_random_graphs:
        pn = precompute_all(g, 4)
        for v in range(g.n):
            for q in range(1, 5):
                rows = [tuple(row) for row in pn.paths(v, q).tolist()]
                assert len(rows) % 2 == 0
                assert Counter(rows) == Counter(row[::-1] for row in rows)
                for row in rows:
                    assert row[0] in g.neighbor_set(v) and row[-1] in g.neighbor_set(v)
                    assert v not in row and len(set(row)) == len(row)
                    assert all(g.has_edge(a, b) for a, b in zip(row, row[1:]))


def test_count_cycles_through(c5, k4):
    pn5 = precompute_all(c5, 3)
    assert all(count_cycles_through(pn5, v, 5) == 1 for v in range(5))
    pn4 = precompute_all(k4, 1)
    assert all(count_cycles_through(pn4, v, 3) == 3 for v in range(4))
    with pytest.raises(NeighborhoodMismatchError):
        count_cycles_through(pn4, 0, 4)


def test_rooted_and_global_cycle_identities():
    for g in random_corpus(12, 10, 0.3, seed=5):
        pn = precompute_all(g, 6)
        for length in range(3, 9):
            q = length - 2
            for v in range(g.n):
                assert pn.size(v, q) == rooted_sub_cycle(g, v, length).value
            assert pn.total_paths(q) == sub_count(cycle_pattern(length), g).value


def test_sizes_are_permutation_equivariant(small_random_graphs):
    for seed, g in enumerate(small_random_graphs[:8]):
        sigma = VertexPermutation.random(g.n, seed)
        before = precompute_all(g, 3)
        after = precompute_all(permute(g, sigma), 3)
        for v in range(g.n):
            for q in range(1, 4):
                assert before.size(v, q) == after.size(sigma(v), q)


def test_budget_guard_raises_distinct_error(k4):
    with pytest.raises(PathBudgetExceededError) as info:
        precompute_all(k4, 2, budget=10)
    assert info.value.budget == 10


def test_neighbourhood_must_match_graph(k4, c5):
    pn = precompute_all(k4, 1)
    with pytest.raises(NeighborhoodMismatchError):
        pn.ensure_matches(c5, 1)
    with pytest.raises(NeighborhoodMismatchError):
        pn.ensure_matches(k4, 2)


def test_statistics_dump(k4):
    stats = neighborhood_statistics(precompute_all(k4, 2))
    assert stats == {"n": 4, "m": 6, "r": 2, "paths_q1": 24, "paths_q2": 24, "total_paths": 48}

from __future__ import annotations

import numpy as np
import pytest

from loopy_wl.domain.generators import gen_complete, gen_cycle, gen_path, gen_star
from loopy_wl.domain.graphs import Graph, VertexOutOfRangeError, VertexPermutation, disjoint_union, permute
from loopy_wl.domain.oracles import (
    OracleBudgetExceededError,
    automorphism_count,
    cycle_pattern,
    hom_count,
    hom_profile,
    is_forest,
    is_iso_bruteforce,
    is_subgraph_gnn_countable,
    quotient,
    rooted_sub_cycle,
    spasm,
    sub_count,
)
from loopy_wl.domain.oracles.spasm import _independent_partitions
from loopy_wl.shared.config import BudgetConfig

from .conftest import random_corpus

K2 = gen_complete(2)


def test_edge_homomorphisms_count_oriented_edges(small_random_graphs):
    for g in small_random_graphs:
        assert hom_count(K2, g).value == 2 * g.m


def test_known_counts(k3, k4, c6_chord):
    assert hom_count(k3, k3).value == 6
    assert hom_count(gen_cycle(4), k3).value == 18
    assert hom_count(gen_path(3), k4).value == 36
    assert sub_count(k3, k4).value == 24
    assert sub_count(gen_cycle(4), gen_cycle(4)).value == 8
    assert sub_count(k3, c6_chord).value == 0


def test_closed_walks_match_matrix_powers(small_random_graphs):
    for g in small_random_graphs[:10]:
        a = g.adjacency_matrix().astype(np.int64)
        for length in range(3, 7):
            walks = int(np.trace(np.linalg.matrix_power(a, length)))
            assert hom_count(cycle_pattern(length), g).value == walks


def test_empty_and_oversized_patterns(k3):
    assert hom_count(Graph.empty(0), k3).value == 1
    assert sub_count(gen_complete(4), k3).value == 0


def test_disconnected_pattern_multiplies(k4):
    pattern = disjoint_union(K2, K2)
    assert hom_count(pattern, k4).value == 12 * 12


def test_hom_equals_sum_of_injective_quotients():
    host = random_corpus(1, 8, 0.5, seed=3)[0]
    for pattern in (gen_cycle(4), gen_path(4), gen_star(3), gen_cycle(5)):
        total = sum(
            sub_count(quotient(pattern, assignment), host).value
            for assignment in _independent_partitions(pattern)
        )
        assert hom_count(pattern, host).value == total


def test_rooted_cycle_counts(k4, c5):
    assert rooted_sub_cycle(k4, 0, 3).value == 6
    assert rooted_sub_cycle(k4, 0, 4).value == 6
    assert rooted_sub_cycle(c5, 2, 5).value == 2
    assert rooted_sub_cycle(c5, 2, 4).value == 0


def test_rooted_cycle_argument_checks(c5):
    with pytest.raises(ValueError):
        rooted_sub_cycle(c5, 0, 2)
    with pytest.raises(ValueError):
        rooted_sub_cycle(c5, 0, 11)
    with pytest.raises(VertexOutOfRangeError):
        rooted_sub_cycle(c5, 9, 3)


@pytest.mark.parametrize(
    "graph, expected",
    [(gen_cycle(6), 12), (gen_complete(4), 24), (gen_star(4), 24), (gen_path(4), 2)],
)
def test_automorphism_count(graph, expected):
    assert automorphism_count(graph) == expected


def test_hom_profile(k4):
    assert hom_profile([K2, gen_complete(3)], k4) == (12, 24)


def test_budget_limits():
    with pytest.raises(OracleBudgetExceededError):
        hom_count(gen_path(13), gen_complete(3))
    with pytest.raises(OracleBudgetExceededError):
        sub_count(K2, gen_path(65))
    with pytest.raises(OracleBudgetExceededError):
        hom_count(gen_path(4), gen_complete(4), budget=BudgetConfig(hom_pattern_max_n=3))


def test_isomorphism_accepts_permuted_copies(small_random_graphs):
    for seed, g in enumerate(small_random_graphs[:10]):
        assert is_iso_bruteforce(g, permute(g, VertexPermutation.random(g.n, seed)))


def test_isomorphism_rejects_wl_equivalent_pairs(c6_chord, two_triangles, shrikhande, rook):
    assert not is_iso_bruteforce(c6_chord, two_triangles)
    assert not is_iso_bruteforce(shrikhande, rook)
    assert not is_iso_bruteforce(gen_cycle(6), disjoint_union(gen_complete(3), gen_complete(3)))


def test_isomorphism_size_limit():
    with pytest.raises(OracleBudgetExceededError):
        is_iso_bruteforce(gen_cycle(17), gen_cycle(17))


def test_forest_check(p4, c5):
    assert is_forest(p4)
    assert is_forest(disjoint_union(p4, gen_star(3)))
    assert not is_forest(c5)


def test_spasm_of_small_patterns(k3):
    c4_spasm = spasm(gen_cycle(4))
    assert [(g.n, g.m) for g in c4_spasm] == [(4, 4), (3, 2), (2, 1)]
    assert spasm(k3) == [k3]
    assert [(g.n, g.m) for g in spasm(gen_path(3))] == [(3, 2), (2, 1)]


def test_spasm_members_are_pairwise_non_isomorphic():
    members = spasm(gen_cycle(6))
    for i, left in enumerate(members):
        for right in members[i + 1:]:
            assert not is_iso_bruteforce(left, right)


def test_spasm_size_limit():
    with pytest.raises(OracleBudgetExceededError):
        spasm(gen_cycle(9))


@pytest.mark.parametrize(
    "pattern, expected",
    [
        (gen_cycle(4), True),
        (gen_complete(3), True),
        (gen_complete(4), False),
        (Graph.from_edges(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]), True),
        (disjoint_union(gen_complete(3), gen_complete(3)), False),
        (gen_path(5), True),
    ],
)
def test_subgraph_gnn_countable(pattern, expected):
    assert is_subgraph_gnn_countable(pattern) is expected

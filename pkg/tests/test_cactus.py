from __future__ import annotations

import pytest

from loopy_wl.domain.cactus import (
    CYCLE,
    NODE,
    TREE_EDGE,
    DisconnectedGraphError,
    FanBlock,
    NotACactusError,
    TreeDecomposition,
    canonical_tree_decomposition,
    fan_blocks,
    is_cactus,
    is_fan_cactus,
    is_outerplanar,
    is_r_cactus,
    rooted_cactus_code,
    td_canonical_code,
    td_depth,
    validate_tree_decomposition,
)
from loopy_wl.domain.generators import (
    gen_chordal_pair,
    gen_complete,
    gen_cycle,
    gen_fan_cactus,
    gen_path,
    gen_random_cactus,
    gen_random_sparse,
)
from loopy_wl.domain.graphs import Graph, VertexPermutation, biconnected_components, disjoint_union, permute

K23 = Graph.from_edges(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)])


def test_cactus_recognition(c5, k4, two_triangles, c6_chord):
    assert is_cactus(c5)
    assert is_cactus(two_triangles)
    assert is_cactus(gen_random_sparse(12, 1.0, seed=2))
    assert not is_cactus(k4)
    assert not is_cactus(c6_chord)


def test_r_cactus_bounds_cycle_length(two_triangles, p4, c5):
    assert is_r_cactus(two_triangles, 3)
    assert not is_r_cactus(two_triangles, 2)
    assert is_r_cactus(p4, 0)
    assert not is_r_cactus(c5, 4)
    assert is_r_cactus(c5, 5)


def test_random_cacti_are_cacti():
    for seed in range(10):
        g = gen_random_cactus(20, 6, seed)
        assert g.n >= 20
        assert is_r_cactus(g, 6)


def test_fan_blocks_of_chorded_cycle(c6_chord):
    blocks = fan_blocks(c6_chord, 0)
    assert blocks == [FanBlock("cycle", (0, 1, 2, 3, 4, 5), (3,))]
    assert blocks[0].top == 0
    assert blocks[0].lower == (1, 2, 3, 4, 5)


def test_fan_cactus_depends_on_root(c6_chord, k4):
    assert is_fan_cactus(c6_chord, 0)
    assert not is_fan_cactus(c6_chord, 1)
    assert not is_fan_cactus(k4, 0)
    assert not is_fan_cactus(disjoint_union(gen_cycle(3), gen_cycle(3)), 0)


def test_generated_fan_cacti_are_fan_cacti():
    for seed in range(10):
        g, root = gen_fan_cactus(18, 7, 0.6, seed)
        assert is_fan_cactus(g, root)
        assert is_outerplanar(g)


def test_fan_cactus_without_chords_is_the_random_cactus():
    for seed in range(5):
        g, _ = gen_fan_cactus(18, 7, 0.0, seed)
        assert g == gen_random_cactus(18, 7, seed)


@pytest.mark.parametrize(
    "graph, expected",
    [
        (gen_complete(4), False),
        (K23, False),
        (gen_cycle(7), True),
        (gen_path(5), True),
        (gen_chordal_pair(0)[0], True),
    ],
)
def test_outerplanarity(graph, expected):
    assert is_outerplanar(graph) is expected


def test_decomposition_of_single_vertex():
    td = canonical_tree_decomposition(Graph.empty(1), 0)
    assert td.tree.n == 1
    assert td.width == 0
    assert td_depth(td) == 0


def test_decomposition_of_an_edge():
    td = canonical_tree_decomposition(gen_complete(2), 0)
    assert td.bags == (frozenset({0}), frozenset({1}), frozenset({0, 1}))
    assert td.kinds == (NODE, NODE, TREE_EDGE)
    assert td_depth(td) == 2


def test_decomposition_of_a_cycle(c6):
    td = canonical_tree_decomposition(c6, 0)
    assert td.tree.n == 6 + (2 * 6 - 3)
    assert td.width == 2
    assert td.kinds.count(CYCLE) == 9
    assert td_depth(td) == 2
    assert validate_tree_decomposition(c6, td).valid


def test_depth_of_chained_blocks(two_triangles):
    assert td_depth(canonical_tree_decomposition(two_triangles, 0)) == 6
    assert td_depth(canonical_tree_decomposition(gen_path(4), 0)) == 6


def test_canonical_decompositions_are_valid():
    for seed in range(10):
        g, root = gen_fan_cactus(20, 6, 0.5, seed)
        td = canonical_tree_decomposition(g, root)
        report = validate_tree_decomposition(g, td)
        assert report.valid, report.to_dict()
        assert report.width <= 2
        assert report.first_violation is None
        assert td.tree.m == td.tree.n - 1


def test_node_count_follows_block_structure():
    for seed in range(5):
        g = gen_random_cactus(16, 5, seed)
        td = canonical_tree_decomposition(g, 0)
        expected = g.n
        for block in biconnected_components(g):
            expected += 1 if len(block) == 1 else 2 * len(block) - 3
        assert td.tree.n == expected


def test_decomposition_json_roundtrip(two_triangles):
    td = canonical_tree_decomposition(two_triangles, 0)
    assert TreeDecomposition.from_json(td.to_json()) == td
    payload = td.to_dict()
    assert payload["root"] == 0
    assert payload["nodes"] == list(range(td.tree.n))


def test_codes_are_isomorphism_invariant():
    for seed in range(8):
        g, root = gen_fan_cactus(16, 6, 0.5, seed)
        sigma = VertexPermutation.random(g.n, seed)
        h = permute(g, sigma)
        assert rooted_cactus_code(g, root) == rooted_cactus_code(h, sigma(root))
        left = td_canonical_code(canonical_tree_decomposition(g, root), g)
        right = td_canonical_code(canonical_tree_decomposition(h, sigma(root)), h)
        assert left == right


def _codes_over_all_roots(g: Graph) -> tuple[set, set]:
    rooted = {rooted_cactus_code(g, root) for root in range(g.n)}
    decomposed = {td_canonical_code(canonical_tree_decomposition(g, root), g) for root in range(g.n)}
    return rooted, decomposed


@pytest.mark.parametrize(
    "left, right",
    [
        (
            Graph.from_edges(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)]),
            Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)]),
        ),
        (
            Graph.from_edges(4, [(0, 1), (1, 2), (2, 0), (0, 3)]),
            Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)]),
        ),
    ],
    ids=["triangle-tail-vs-square-pendant", "triangle-pendant-vs-square-pendant"],
)
def test_codes_separate_non_isomorphic_cacti(left, right):
    left_rooted, left_td = _codes_over_all_roots(left)
    right_rooted, right_td = _codes_over_all_roots(right)
    assert not left_rooted & right_rooted
    assert not left_td & right_td


def test_same_degree_sequence_cacti_still_get_different_codes():
    tail = Graph.from_edges(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)])
    pendant = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)])
    assert tail.degree_sequence() == pendant.degree_sequence()
    assert td_canonical_code(canonical_tree_decomposition(tail, 2), tail) != td_canonical_code(
        canonical_tree_decomposition(pendant, 0), pendant
    )


def test_codes_separate_different_rootings(p4):
    assert rooted_cactus_code(p4, 0) != rooted_cactus_code(p4, 1)
    assert rooted_cactus_code(gen_cycle(4), 0) != rooted_cactus_code(gen_cycle(5), 0)


@pytest.mark.parametrize(
    "graph, td, code",
    [
        (
            gen_complete(2),
            TreeDecomposition(gen_cycle(3), (frozenset({0}), frozenset({0, 1}), frozenset({1})), 0),
            "td_tree",
        ),
        (
            gen_complete(2),
            TreeDecomposition(gen_path(2), (frozenset({0, 1}), frozenset()), 0),
            "td_bags_nonempty",
        ),
        (
            gen_complete(2),
            TreeDecomposition(gen_path(2), (frozenset({0, 1}),), 0),
            "td_bags_nonempty",
        ),
        (
            gen_path(3),
            TreeDecomposition(gen_path(2), (frozenset({0, 1}), frozenset({2})), 0),
            "td_edge_coverage",
        ),
        (
            gen_path(3),
            TreeDecomposition(
                gen_path(3), (frozenset({0, 1}), frozenset({1, 2}), frozenset({0})), 0
            ),
            "td_vertex_connectivity",
        ),
    ],
)
def test_broken_decompositions_report_first_violation(graph, td, code):
    report = validate_tree_decomposition(graph, td)
    assert not report.valid
    assert report.first_violation.code == code
    assert report.to_dict()["first_violation"] == code


def test_wide_decomposition_is_valid_with_a_note(k4):
    td = TreeDecomposition(Graph.empty(1), (frozenset(range(4)),), 0)
    report = validate_tree_decomposition(k4, td)
    assert report.valid
    assert report.width == 3
    assert [issue.code for issue in report.issues] == ["td_width"]


def test_non_cactus_and_disconnected_inputs_raise(k4):
    with pytest.raises(NotACactusError):
        canonical_tree_decomposition(k4, 0)
    with pytest.raises(DisconnectedGraphError):
        canonical_tree_decomposition(disjoint_union(gen_path(2), gen_path(2)), 0)
    with pytest.raises(DisconnectedGraphError):
        canonical_tree_decomposition(Graph.empty(0), 0)

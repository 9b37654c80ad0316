"""Deterministic constructions of the separating graph families."""

from __future__ import annotations

from itertools import combinations
from typing import Dict, List, Tuple

import networkx as nx
import numpy as np

from ..graphs import Graph, is_connected
from .base import InvalidGeneratorParameterError

CFI_MAX_DEGREE = 8


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise InvalidGeneratorParameterError(message)


def gen_cycle(n: int) -> Graph:
    _require(n >= 3, f"cycle needs n >= 3, got {n}")
    return Graph.from_networkx(nx.cycle_graph(n))


def gen_path(n: int) -> Graph:
    _require(n >= 1, f"path needs n >= 1, got {n}")
    return Graph.from_networkx(nx.path_graph(n))


def gen_complete(n: int) -> Graph:
    _require(n >= 1, f"complete graph needs n >= 1, got {n}")
    return Graph.from_networkx(nx.complete_graph(n))


def gen_star(leaves: int) -> Graph:
    """Centre 0 joined to ``leaves`` leaves."""
    _require(leaves >= 1, f"star needs at least one leaf, got {leaves}")
    return Graph.from_networkx(nx.star_graph(leaves))


def gen_chordal_pair(r: int) -> Tuple[Graph, Graph]:
    """(C_{2r+6} with chord {0, r+3}, two C_{r+3} joined by the bridge {r+2, r+3})."""

    _require(r >= 0, f"r must be non-negative, got {r}")
    n = 2 * r + 6
    half = r + 3
    left_edges = [(i, (i + 1) % n) for i in range(n)] + [(0, half)]
    right_edges = [(i, (i + 1) % half) for i in range(half)]
    right_edges += [(half + i, half + (i + 1) % half) for i in range(half)]
    right_edges.append((half - 1, half))
    return Graph.from_edges(n, left_edges), Graph.from_edges(n, right_edges)


def gen_csl(n: int, s: int) -> Graph:
    """Cycle 0..n-1 with skip links {i, i+s mod n}."""

    _require(n >= 5, f"CSL needs n >= 5, got {n}")
    _require(2 <= s <= n - 2, f"skip length must be in 2..{n - 2}, got {s}")
    return Graph.from_networkx(nx.circulant_graph(n, [1, s]))


def gen_shrikhande() -> Graph:
    """Cayley graph of Z4 x Z4 with connection set {±(1,0), ±(0,1), ±(1,1)}; vertex (a, b) is 4a + b."""

    steps = [(1, 0), (3, 0), (0, 1), (0, 3), (1, 1), (3, 3)]
    edges = []
    for a in range(4):
        for b in range(4):
            for da, db in steps:
                edges.append((4 * a + b, 4 * ((a + da) % 4) + (b + db) % 4))
    return Graph.from_edges(16, edges)


def gen_rook44() -> Graph:
    """K4 x K4: (i, j) ~ (i', j') iff same row or same column; vertex (i, j) is 4i + j."""

    return Graph.from_networkx(nx.cartesian_product(nx.complete_graph(4), nx.complete_graph(4)))


def gen_two_triangles_bridge() -> Graph:
    return Graph.from_edges(6, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (2, 3)])


def cfi_vertex_count(base: Graph) -> int:
    return sum(2 ** max(len(row) - 1, 0) for row in base.adj)


def gen_cfi(base: Graph, twisted: bool = False) -> Graph:
    """Fürer graph of ``base``.

    One vertex (v, S) per even subset S of N(v); (u, S) ~ (v, T) iff {u, v} is a
    base edge and (v in S) == (u in T). The twisted graph inverts that test on
    the smallest base edge. Vertices are numbered by base vertex, then by the
    bitmask of S over the sorted neighbour list.
    """

    _require(base.n >= 1 and is_connected(base), "CFI base graph must be connected and non-empty")
    _require(
        all(len(row) <= CFI_MAX_DEGREE for row in base.adj),
        f"CFI base graph degree exceeds {CFI_MAX_DEGREE}",
    )

    ids: Dict[Tuple[int, int], int] = {}
    members: List[List[int]] = []
    for v, row in enumerate(base.adj):
        masks = [mask for mask in range(2 ** len(row)) if bin(mask).count("1") % 2 == 0]
        members.append(masks)
        for mask in masks:
            ids[(v, mask)] = len(ids)

    def contains(v: int, mask: int, u: int) -> bool:
        return bool(mask >> base.adj[v].index(u) & 1)

    base_edges = base.edges()
    twisted_edge = base_edges[0] if twisted and base_edges else None
    edges = []
    for u, v in base_edges:
        flip = (u, v) == twisted_edge
        for s in members[u]:
            for t in members[v]:
                if (contains(u, s, v) == contains(v, t, u)) != flip:
                    edges.append((ids[(u, s)], ids[(v, t)]))
    return Graph.from_edges(len(ids), edges)


def _grow_cactus(
    n_target: int,
    max_cycle_len: int,
    rng: np.random.Generator,
    on_cycle=None,
) -> Tuple[int, List[Tuple[int, int]]]:
    """Attach pendants or cycles at uniformly random vertices until n >= n_target."""

    n = 1
    edges: List[Tuple[int, int]] = []
    while n < n_target:
        anchor = int(rng.integers(n))
        if rng.random() < 0.5:
            edges.append((anchor, n))
            n += 1
            continue
        length = int(rng.integers(3, max_cycle_len + 1))
        cycle = [anchor] + list(range(n, n + length - 1))
        edges.extend((cycle[i], cycle[(i + 1) % length]) for i in range(length))
        n += length - 1
        if on_cycle is not None:
            on_cycle(cycle)
    return n, edges


def gen_random_cactus(n_target: int, max_cycle_len: int, seed: int) -> Graph:
    _require(n_target >= 1, f"n_target must be positive, got {n_target}")
    _require(max_cycle_len >= 3, f"max_cycle_len must be at least 3, got {max_cycle_len}")
    n, edges = _grow_cactus(n_target, max_cycle_len, np.random.default_rng(seed))
    return Graph.from_edges(n, edges)


def gen_fan_cactus(
    n_target: int,
    max_cycle_len: int,
    chord_prob: float,
    seed: int,
) -> Tuple[Graph, int]:
    """Random cactus rooted at 0 plus chords from each cycle's attachment vertex.

    The attachment vertex of a cycle is its vertex closest to the root. Chords
    draw from a separate stream, so ``chord_prob=0`` reproduces
    ``gen_random_cactus`` for the same seed.
    """

    _require(0.0 <= chord_prob <= 1.0, f"chord_prob must be in [0, 1], got {chord_prob}")
    _require(n_target >= 1, f"n_target must be positive, got {n_target}")
    _require(max_cycle_len >= 3, f"max_cycle_len must be at least 3, got {max_cycle_len}")
    chord_rng = np.random.default_rng([seed, 1])
    chords: List[Tuple[int, int]] = []

    def add_chords(cycle: List[int]) -> None:
        for w in cycle[2:-1]:
            if chord_rng.random() < chord_prob:
                chords.append((cycle[0], w))

    n, edges = _grow_cactus(n_target, max_cycle_len, np.random.default_rng(seed), add_chords)
    return Graph.from_edges(n, edges + chords), 0


def gen_random_graph(n: int, p: float, seed: int) -> Graph:
    _require(n >= 0, f"n must be non-negative, got {n}")
    _require(0.0 <= p <= 1.0, f"p must be in [0, 1], got {p}")
    return Graph.from_networkx(nx.gnp_random_graph(n, p, seed=seed))


def gen_random_sparse(n: int, avg_degree: float, seed: int) -> Graph:
    """Connected sparse graph: a random recursive tree plus random extra edges."""

    _require(n >= 1, f"n must be positive, got {n}")
    rng = np.random.default_rng(seed)
    edges = {(int(rng.integers(v)), v) for v in range(1, n)}
    target = max(len(edges), int(round(n * avg_degree / 2)))
    available = [pair for pair in combinations(range(n), 2) if pair not in edges]
    extra = target - len(edges)
    if extra > 0 and available:
        picks = rng.choice(len(available), size=min(extra, len(available)), replace=False)
        edges.update(available[int(i)] for i in picks)
    return Graph.from_edges(n, sorted(edges))

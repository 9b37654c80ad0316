"""Structural primitives shared by every other module."""

from __future__ import annotations

from collections.abc import Iterable
from typing import FrozenSet, List, Tuple

import networkx as nx

from .base import Edge, Graph, PermutationSizeError, VertexOutOfRangeError, VertexPermutation


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """Place ``h`` after ``g``; h's ids are shifted by ``g.n``."""

    offset = g.n
    shifted = tuple(tuple(u + offset for u in row) for row in h.adj)
    return Graph(n=g.n + h.n, adj=g.adj + shifted)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Induced subgraph on ``vertices``, relabelled 0..|s|-1 in sorted order."""

    chosen = sorted(set(vertices))
    for v in chosen:
        if not 0 <= v < g.n:
            raise VertexOutOfRangeError(v, g.n)
    index = {v: i for i, v in enumerate(chosen)}
    rows = tuple(
        tuple(index[u] for u in g.adj[v] if u in index) for v in chosen
    )
    return Graph(n=len(chosen), adj=rows)


def permute(g: Graph, p: VertexPermutation) -> Graph:
    """Relabel ``g`` so that {u, v} becomes {p(u), p(v)}."""

    if len(p) != g.n:
        raise PermutationSizeError(f"permutation of size {len(p)} for graph with n={g.n}")
    return Graph.from_edges(g.n, ((p(u), p(v)) for u, v in g.edges()))


def biconnected_components(g: Graph) -> List[FrozenSet[Edge]]:
    """Partition E(g) into biconnected blocks; bridges come out as singleton blocks.

    Blocks are returned sorted by their smallest edge so the order is stable.
    """

    blocks = [
        frozenset((min(u, v), max(u, v)) for u, v in block)
        for block in nx.biconnected_component_edges(g.to_networkx())
    ]
    return sorted(blocks, key=min)


def block_vertices(block: Iterable[Edge]) -> FrozenSet[int]:
    return frozenset(v for edge in block for v in edge)


def connected_components(g: Graph) -> List[Tuple[int, ...]]:
    """Vertex sets of the connected components, each sorted, ordered by smallest vertex."""

    components = [tuple(sorted(c)) for c in nx.connected_components(g.to_networkx())]
    return sorted(components)


def is_connected(g: Graph) -> bool:
    return g.n == 0 or len(connected_components(g)) == 1

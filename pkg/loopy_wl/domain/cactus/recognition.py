"""Cactus and fan-cactus recognition."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Tuple

import networkx as nx

from ..graphs import Edge, Graph, VertexOutOfRangeError, biconnected_components, block_vertices, is_connected


class NotACactusError(ValueError):
    """Raised when a graph is not a (fan) cactus."""


class DisconnectedGraphError(ValueError):
    """Raised when a connected input is required."""


def _is_cycle_block(block: FrozenSet[Edge]) -> bool:
    vertices = block_vertices(block)
    if len(block) != len(vertices):
        return False
    degree: Dict[int, int] = {}
    for u, v in block:
        degree[u] = degree.get(u, 0) + 1
        degree[v] = degree.get(v, 0) + 1
    return all(d == 2 for d in degree.values())


def is_cactus(g: Graph) -> bool:
    """Every block is a bridge or a chordless cycle."""

    return all(len(block) == 1 or _is_cycle_block(block) for block in biconnected_components(g))


def is_r_cactus(g: Graph, r: int) -> bool:
    """Cactus whose cycles have at most r vertices (r < 3 means forest)."""

    for block in biconnected_components(g):
        if len(block) == 1:
            continue
        if not _is_cycle_block(block) or len(block) > r:
            return False
    return True


def bfs_distances(g: Graph, root: int) -> List[int]:
    if not 0 <= root < g.n:
        raise VertexOutOfRangeError(root, g.n)
    dist = [-1] * g.n
    dist[root] = 0
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for u in g.adj[v]:
            if dist[u] < 0:
                dist[u] = dist[v] + 1
                queue.append(u)
    return dist


@dataclass(frozen=True, slots=True)
class FanBlock:
    """A bridge (``cycle`` = its two ends, top first) or a fan cycle.

    For a cycle, ``cycle[0]`` is the vertex closest to the root and ``chords``
    are the extra edges from it to non-consecutive cycle vertices.
    """

    kind: str
    cycle: Tuple[int, ...]
    chords: Tuple[int, ...] = ()

    @property
    def top(self) -> int:
        return self.cycle[0]

    @property
    def lower(self) -> Tuple[int, ...]:
        return self.cycle[1:]


def _fan_block(block: FrozenSet[Edge], dist: List[int]) -> FanBlock:
    vertices = sorted(block_vertices(block))
    if len(block) == 1:
        u, v = vertices
        return FanBlock("bridge", (u, v) if dist[u] < dist[v] else (v, u))

    top_dist = min(dist[v] for v in vertices)
    tops = [v for v in vertices if dist[v] == top_dist]
    if len(tops) != 1:
        raise NotACactusError(f"block {vertices} has no unique vertex closest to the root")
    top = tops[0]

    rest: Dict[int, List[int]] = {v: [] for v in vertices if v != top}
    spokes = set()
    for u, v in block:
        if top in (u, v):
            spokes.add(v if u == top else u)
        else:
            rest[u].append(v)
            rest[v].append(u)

    ends = [v for v, nbrs in rest.items() if len(nbrs) <= 1]
    path_edges = sum(len(nbrs) for nbrs in rest.values()) // 2
    if any(len(nbrs) > 2 for nbrs in rest.values()) or path_edges != len(rest) - 1 or len(ends) != 2:
        raise NotACactusError(f"block {vertices} minus {top} is not a simple path")
    if not set(ends) <= spokes:
        raise NotACactusError(f"block {vertices}: path ends are not both adjacent to {top}")

    start = min(ends)
    order = [start]
    previous = None
    while len(order) < len(rest):
        current = order[-1]
        following = [w for w in rest[current] if w != previous]
        previous = current
        order.append(following[0])
    if order[-1] != max(ends):
        raise NotACactusError(f"block {vertices} minus {top} is not connected")
    chords = tuple(sorted(spokes - set(ends)))
    return FanBlock("cycle", (top, *order), chords)


def fan_blocks(g: Graph, root: int) -> List[FanBlock]:
    """Split a connected fan cactus into bridges and fan cycles, relative to ``root``."""

    if g.n == 0 or not is_connected(g):
        raise DisconnectedGraphError("fan-cactus decomposition needs a connected graph")
    dist = bfs_distances(g, root)
    return [_fan_block(block, dist) for block in biconnected_components(g)]


def is_fan_cactus(g: Graph, root: int) -> bool:
    try:
        fan_blocks(g, root)
    except (NotACactusError, DisconnectedGraphError):
        return False
    return True


def is_outerplanar(g: Graph) -> bool:
    """Planar after adding a vertex adjacent to everything."""

    graph = g.to_networkx()
    apex = g.n
    graph.add_edges_from((apex, v) for v in range(g.n))
    planar, _ = nx.check_planarity(graph)
    return planar

"""Exact enumeration of r-neighbourhoods: oriented simple paths between neighbours of v that avoid v."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import numpy as np

from ..graphs import Graph, VertexOutOfRangeError

logger = logging.getLogger(__name__)


class PathBudgetExceededError(RuntimeError):
    """Raised when enumeration would store more paths than the configured budget."""

    def __init__(self, budget: int, vertex: int, length: int):
        self.budget = budget
        self.vertex = vertex
        self.length = length
        super().__init__(
            f"path budget of {budget} exceeded while enumerating N_{length}({vertex})"
        )


class NeighborhoodMismatchError(ValueError):
    """Raised when a neighbourhood is used with a graph or length it was not built for."""


@dataclass(frozen=True, slots=True)
class OrientedPath:
    nodes: Tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.nodes) - 1

    def reversed(self) -> OrientedPath:
        return OrientedPath(self.nodes[::-1])


class _Budget:
    __slots__ = ("limit", "used")

    def __init__(self, limit: Optional[int]):
        self.limit = limit
        self.used = 0

    def charge(self, vertex: int, length: int) -> None:
        self.used += 1
        if self.limit is not None and self.used > self.limit:
            raise PathBudgetExceededError(self.limit, vertex, length)


def _collect(g: Graph, v: int, r: int, budget: _Budget) -> List[List[Tuple[int, ...]]]:
    """DFS from every neighbour of v (v blocked); bucket paths by length when they end in N(v).

    Neighbours are visited in sorted order, so each bucket comes out in
    lexicographic order of node sequences.
    """

    buckets: List[List[Tuple[int, ...]]] = [[] for _ in range(r + 1)]
    if r < 1:
        return buckets
    targets = g.neighbor_set(v)
    adj = g.adj
    blocked = bytearray(g.n)
    blocked[v] = 1
    path: List[int] = []

    def extend(u: int) -> None:
        path.append(u)
        blocked[u] = 1
        q = len(path) - 1
        if q >= 1 and u in targets:
            budget.charge(v, q)
            buckets[q].append(tuple(path))
        if q < r:
            for w in adj[u]:
                if not blocked[w]:
                    extend(w)
        blocked[u] = 0
        path.pop()

    for start in adj[v]:
        extend(start)
    return buckets


def enumerate_neighborhood(g: Graph, v: int, q: int) -> List[OrientedPath]:
    """All oriented simple q-edge paths with both ends in N(v) and avoiding v."""

    if not 0 <= v < g.n:
        raise VertexOutOfRangeError(v, g.n)
    if q < 1:
        raise ValueError("path length must be at least 1")
    return [OrientedPath(nodes) for nodes in _collect(g, v, q, _Budget(None))[q]]


@dataclass(slots=True)
class PathNeighborhood:
    """N_0..N_r for every vertex, in a flat per-length layout.

    For each q in 1..r, ``path_arrays[q]`` has shape (total, q+1) and the rows
    belonging to v are ``offsets[q][v]:offsets[q][v+1]``.
    """

    source: Graph
    r: int
    path_arrays: Dict[int, np.ndarray] = field(default_factory=dict)
    offsets: Dict[int, np.ndarray] = field(default_factory=dict)

    @property
    def n(self) -> int:
        return self.source.n

    def neighbors(self, v: int) -> Tuple[int, ...]:
        """N_0(v) is the plain neighbour list."""
        return self.source.adj[v]

    def _check(self, v: int, q: int) -> None:
        if not 0 <= v < self.n:
            raise VertexOutOfRangeError(v, self.n)
        if not 1 <= q <= self.r:
            raise NeighborhoodMismatchError(f"length {q} outside 1..{self.r}")

    def size(self, v: int, q: int) -> int:
        if q == 0:
            return len(self.neighbors(v))
        self._check(v, q)
        off = self.offsets[q]
        return int(off[v + 1] - off[v])

    def paths(self, v: int, q: int) -> np.ndarray:
        self._check(v, q)
        off = self.offsets[q]
        return self.path_arrays[q][off[v]:off[v + 1]]

    def total_paths(self, q: Optional[int] = None) -> int:
        if q is not None:
            return int(self.path_arrays[q].shape[0]) if q in self.path_arrays else 0
        return sum(int(arr.shape[0]) for arr in self.path_arrays.values())

    def counts_by_length(self) -> Dict[int, int]:
        return {q: self.total_paths(q) for q in range(1, self.r + 1)}

    def message_cost(self) -> int:
        """|E| + sum over v and q of 2q|N_q(v)|: messages exchanged by one loopy round."""
        return self.source.m + sum(2 * q * self.total_paths(q) for q in range(1, self.r + 1))

    def ensure_matches(self, g: Graph, r: int) -> None:
        if self.source is not g and self.source != g:
            raise NeighborhoodMismatchError("path neighbourhood was computed on a different graph")
        if self.r < r:
            raise NeighborhoodMismatchError(f"neighbourhood holds lengths up to {self.r}, {r} requested")


def precompute_all(g: Graph, r: int, *, budget: Optional[int] = None) -> PathNeighborhood:
    """Enumerate N_q(v) for every vertex and every q <= r."""

    if r < 0:
        raise ValueError("r must be non-negative")
    guard = _Budget(budget)
    per_vertex = [_collect(g, v, r, guard) for v in range(g.n)]

    pn = PathNeighborhood(source=g, r=r)
    for q in range(1, r + 1):
        counts = np.fromiter((len(buckets[q]) for buckets in per_vertex), dtype=np.int64, count=g.n)
        offsets = np.zeros(g.n + 1, dtype=np.int64)
        np.cumsum(counts, out=offsets[1:])
        rows = [path for buckets in per_vertex for path in buckets[q]]
        if rows:
            array = np.asarray(rows, dtype=np.int64).reshape(len(rows), q + 1)
        else:
            array = np.empty((0, q + 1), dtype=np.int64)
        pn.path_arrays[q] = array
        pn.offsets[q] = offsets
    logger.debug(f"Precomputed r={r} neighbourhoods on n={g.n}: {guard.used} paths")
    return pn


def count_cycles_through(pn: PathNeighborhood, v: int, cycle_len: int) -> int:
    """Distinct simple cycles of length ``cycle_len`` through v, as |N_{L-2}(v)| / 2."""

    if not 3 <= cycle_len <= pn.r + 2:
        raise NeighborhoodMismatchError(
            f"cycle length {cycle_len} outside 3..{pn.r + 2} for r={pn.r}"
        )
    return pn.size(v, cycle_len - 2) // 2


def neighborhood_statistics(pn: PathNeighborhood) -> Dict[str, int]:
    """Per-length path totals, flattened for the CSV dump."""

    stats = {"n": pn.n, "m": pn.source.m, "r": pn.r}
    stats.update({f"paths_q{q}": count for q, count in pn.counts_by_length().items()})
    stats["total_paths"] = pn.total_paths()
    return stats

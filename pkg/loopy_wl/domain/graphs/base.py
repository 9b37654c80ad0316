"""Immutable simple undirected graph and vertex permutations."""

from __future__ import annotations

from bisect import bisect_left
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from typing import List, Tuple

import networkx as nx
import numpy as np

Edge = Tuple[int, int]


class GraphError(ValueError):
    """Raised when a graph or permutation violates its structural invariants."""


class VertexOutOfRangeError(GraphError, IndexError):
    """Raised when a vertex id falls outside 0..n-1."""

    def __init__(self, vertex: int, n: int):
        self.vertex = vertex
        self.n = n
        super().__init__(f"vertex {vertex} out of range for n={n}")


class PermutationSizeError(GraphError):
    """Raised when a permutation does not match the graph it is applied to."""


@dataclass(frozen=True, slots=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1 with sorted adjacency tuples."""

    n: int
    adj: Tuple[Tuple[int, ...], ...]
    _neighbor_sets: Tuple[frozenset, ...] = field(
        init=False, repr=False, compare=False, default=()
    )

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphError("vertex count must be non-negative")
        if len(self.adj) != self.n:
            raise GraphError(f"adjacency has {len(self.adj)} rows for n={self.n}")

        sets = []
        for v, row in enumerate(self.adj):
            if any(row[i] >= row[i + 1] for i in range(len(row) - 1)):
                raise GraphError(f"adjacency of {v} is not strictly sorted")
            for u in row:
                if not 0 <= u < self.n:
                    raise VertexOutOfRangeError(u, self.n)
                if u == v:
                    raise GraphError(f"self-loop at {v}")
            sets.append(frozenset(row))
        for v, row in enumerate(self.adj):
            for u in row:
                if v not in sets[u]:
                    raise GraphError(f"adjacency not symmetric on {{{v}, {u}}}")
        object.__setattr__(self, "_neighbor_sets", tuple(sets))

    @classmethod
    def empty(cls, n: int = 0) -> Graph:
        return cls(n=n, adj=tuple(() for _ in range(n)))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> Graph:
        """Build a graph from an edge iterable; duplicate edges collapse."""

        rows: List[set] = [set() for _ in range(n)]
        for edge in edges:
            u, v = int(edge[0]), int(edge[1])
            for w in (u, v):
                if not 0 <= w < n:
                    raise VertexOutOfRangeError(w, n)
            if u == v:
                raise GraphError(f"self-loop at {u}")
            rows[u].add(v)
            rows[v].add(u)
        return cls(n=n, adj=tuple(tuple(sorted(row)) for row in rows))

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> Graph:
        """Convert a networkx graph, relabelling nodes by their sorted order."""

        nodes = sorted(graph.nodes())
        index = {node: i for i, node in enumerate(nodes)}
        return cls.from_edges(
            len(nodes), ((index[u], index[v]) for u, v in graph.edges() if u != v)
        )

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edges())
        return graph

    @property
    def m(self) -> int:
        return sum(len(row) for row in self.adj) // 2

    def edges(self) -> List[Edge]:
        return [(u, v) for u, row in enumerate(self.adj) for v in row if u < v]

    def neighbors(self, v: int) -> Tuple[int, ...]:
        self._check_vertex(v)
        return self.adj[v]

    def neighbor_set(self, v: int) -> frozenset:
        return self._neighbor_sets[v]

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self.adj[v])

    def degree_sequence(self) -> Tuple[int, ...]:
        return tuple(sorted((len(row) for row in self.adj), reverse=True))

    def has_edge(self, u: int, v: int) -> bool:
        row = self.adj[u]
        i = bisect_left(row, v)
        return i < len(row) and row[i] == v

    def adjacency_matrix(self) -> np.ndarray:
        matrix = np.zeros((self.n, self.n), dtype=np.int64)
        for u, v in self.edges():
            matrix[u, v] = matrix[v, u] = 1
        return matrix

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise VertexOutOfRangeError(v, self.n)


@dataclass(frozen=True, slots=True)
class VertexPermutation:
    """Bijection on 0..n-1, stored as the image array."""

    sigma: Tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.sigma) != list(range(len(self.sigma))):
            raise GraphError("permutation is not a bijection on 0..n-1")

    @classmethod
    def identity(cls, n: int) -> VertexPermutation:
        return cls(tuple(range(n)))

    @classmethod
    def random(cls, n: int, seed: int) -> VertexPermutation:
        rng = np.random.default_rng(seed)
        return cls(tuple(int(x) for x in rng.permutation(n)))

    def __len__(self) -> int:
        return len(self.sigma)

    def __call__(self, v: int) -> int:
        return self.sigma[v]

    def inverse(self) -> VertexPermutation:
        inv = [0] * len(self.sigma)
        for v, image in enumerate(self.sigma):
            inv[image] = v
        return VertexPermutation(tuple(inv))

"""Brute-force homomorphism and subgraph-isomorphism counting."""

from __future__ import annotations

import logging
import time
from collections import deque
from typing import Dict, List, Optional, Sequence, Tuple

from ...shared.config import BudgetConfig
from ...shared.dto import CountResult
from ..graphs import Graph, VertexOutOfRangeError, connected_components

logger = logging.getLogger(__name__)


class OracleBudgetExceededError(RuntimeError):
    """Raised when an oracle input exceeds the configured size limits."""


def _check_sizes(pattern: Graph, host: Graph, budget: Optional[BudgetConfig]) -> None:
    budget = budget or BudgetConfig()
    if pattern.n > budget.hom_pattern_max_n:
        raise OracleBudgetExceededError(
            f"pattern has {pattern.n} vertices, limit is {budget.hom_pattern_max_n}"
        )
    if host.n > budget.hom_host_max_n:
        raise OracleBudgetExceededError(f"host has {host.n} vertices, limit is {budget.hom_host_max_n}")


def _bfs_order(pattern: Graph, component: Sequence[int], start: Optional[int] = None) -> List[int]:
    """BFS order from ``start`` or from the max-degree vertex (smallest id on ties)."""

    if start is None:
        start = max(component, key=lambda v: (len(pattern.adj[v]), -v))
    order = [start]
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for u in pattern.adj[v]:
            if u not in seen:
                seen.add(u)
                order.append(u)
                queue.append(u)
    return order


class _Search:
    """Backtracking over a fixed vertex order; each step only tries images adjacent to earlier ones."""

    def __init__(self, pattern: Graph, host: Graph, order: List[int], *, injective: bool,
                 fixed: Optional[Dict[int, int]] = None) -> None:
        self.host = host
        self.order = order
        self.injective = injective
        self.fixed = fixed or {}
        position = {v: i for i, v in enumerate(order)}
        self.back = [
            [u for u in pattern.adj[v] if position[u] < position[v]] for v in order
        ]
        self.image: Dict[int, int] = {}
        self.used = [False] * host.n
        self.nodes = 0

    def _candidates(self, depth: int) -> List[int]:
        v = self.order[depth]
        host = self.host
        anchors = [self.image[u] for u in self.back[depth]]
        if v in self.fixed:
            candidates = [self.fixed[v]]
        elif anchors:
            candidates = host.adj[anchors[0]]
        else:
            candidates = range(host.n)
        return [
            w for w in candidates
            if not (self.injective and self.used[w])
            and all(w in host.neighbor_set(a) for a in anchors)
        ]

    def count(self, depth: int = 0) -> int:
        if depth == len(self.order):
            return 1
        candidates = self._candidates(depth)
        self.nodes += 1
        if depth == len(self.order) - 1:
            return len(candidates)
        v = self.order[depth]
        total = 0
        for w in candidates:
            self.image[v] = w
            self.used[w] = True
            total += self.count(depth + 1)
            self.used[w] = False
        self.image.pop(v, None)
        return total


def _count_maps(
    pattern: Graph,
    host: Graph,
    *,
    injective: bool,
    fixed: Optional[Dict[int, int]] = None,
) -> Tuple[int, int]:
    """Return (count, search nodes) of edge-preserving maps pattern -> host."""

    if pattern.n == 0:
        return 1, 0
    fixed = fixed or {}
    components = connected_components(pattern)
    orders = []
    for component in components:
        anchor = next((v for v in component if v in fixed), None)
        orders.append(_bfs_order(pattern, component, anchor))

    if injective:
        search = _Search(pattern, host, [v for order in orders for v in order], injective=True, fixed=fixed)
        return search.count(), search.nodes

    total, nodes = 1, 0
    for order in orders:
        search = _Search(pattern, host, order, injective=False, fixed=fixed)
        total *= search.count()
        nodes += search.nodes
        if total == 0:
            break
    return total, nodes


def hom_count(f: Graph, g: Graph, *, budget: Optional[BudgetConfig] = None) -> CountResult:
    """Number of homomorphisms f -> g (exact, arbitrary precision)."""

    _check_sizes(f, g, budget)
    started = time.perf_counter()
    value, nodes = _count_maps(f, g, injective=False)
    return CountResult(value=value, elapsed=time.perf_counter() - started, nodes_explored=nodes)


def sub_count(f: Graph, g: Graph, *, budget: Optional[BudgetConfig] = None) -> CountResult:
    """Number of injective homomorphisms f -> g."""

    _check_sizes(f, g, budget)
    started = time.perf_counter()
    if f.n > g.n:
        return CountResult(value=0, elapsed=time.perf_counter() - started)
    value, nodes = _count_maps(f, g, injective=True)
    return CountResult(value=value, elapsed=time.perf_counter() - started, nodes_explored=nodes)


def cycle_pattern(length: int) -> Graph:
    return Graph.from_edges(length, ((i, (i + 1) % length) for i in range(length)))


def rooted_sub_cycle(
    g: Graph,
    v: int,
    cycle_len: int,
    *,
    budget: Optional[BudgetConfig] = None,
) -> CountResult:
    """Injective maps C_L -> g sending cycle vertex 0 to v (twice the L-cycles through v)."""

    max_len = (budget or BudgetConfig()).cycle_max_len
    if not 3 <= cycle_len <= max_len:
        raise ValueError(f"cycle length {cycle_len} outside 3..{max_len}")
    if not 0 <= v < g.n:
        raise VertexOutOfRangeError(v, g.n)
    started = time.perf_counter()
    value, nodes = _count_maps(cycle_pattern(cycle_len), g, injective=True, fixed={0: v})
    return CountResult(value=value, elapsed=time.perf_counter() - started, nodes_explored=nodes)


def automorphism_count(f: Graph) -> int:
    return _count_maps(f, f, injective=True)[0]


def hom_profile(patterns: Sequence[Graph], g: Graph, *, budget: Optional[BudgetConfig] = None) -> Tuple[int, ...]:
    return tuple(hom_count(f, g, budget=budget).value for f in patterns)

"""Spasm enumeration: homomorphic images of a pattern under surjective maps."""

from __future__ import annotations

import logging
from typing import Dict, Iterator, List, Optional, Tuple

from ...shared.config import BudgetConfig
from ..graphs import Graph, induced_subgraph
from .counting import OracleBudgetExceededError
from .isomorphism import is_forest, is_iso_bruteforce

logger = logging.getLogger(__name__)


def _independent_partitions(f: Graph) -> Iterator[List[int]]:
    """Restricted-growth block assignments in which no block holds an edge."""

    blocks: List[set] = []
    assignment = [0] * f.n

    def place(v: int) -> Iterator[List[int]]:
        if v == f.n:
            yield list(assignment)
            return
        neighbours = f.neighbor_set(v)
        for index, block in enumerate(blocks):
            if block.isdisjoint(neighbours):
                block.add(v)
                assignment[v] = index
                yield from place(v + 1)
                block.discard(v)
        blocks.append({v})
        assignment[v] = len(blocks) - 1
        yield from place(v + 1)
        blocks.pop()

    yield from place(0)


def quotient(f: Graph, assignment: List[int]) -> Graph:
    size = max(assignment) + 1 if assignment else 0
    return Graph.from_edges(size, ((assignment[u], assignment[v]) for u, v in f.edges()))


def spasm(f: Graph, *, budget: Optional[BudgetConfig] = None) -> List[Graph]:
    """Non-isomorphic quotients of ``f`` over partitions into independent sets.

    Ordered by decreasing vertex count, then edge count, then edge list.
    """

    limit = (budget or BudgetConfig()).spasm_max_n
    if f.n > limit:
        raise OracleBudgetExceededError(f"spasm limited to patterns with n <= {limit}")

    classes: Dict[Tuple[int, int, Tuple[int, ...]], List[Graph]] = {}
    for assignment in _independent_partitions(f):
        image = quotient(f, assignment)
        key = (image.n, image.m, image.degree_sequence())
        bucket = classes.setdefault(key, [])
        if not any(is_iso_bruteforce(image, seen) for seen in bucket):
            bucket.append(image)

    members = [graph for bucket in classes.values() for graph in bucket]
    members.sort(key=lambda graph: (-graph.n, -graph.m, graph.edges()))
    logger.debug(f"spasm of n={f.n}, m={f.m}: {len(members)} classes")
    return members


def is_subgraph_gnn_countable(f: Graph) -> bool:
    """True iff deleting some single vertex leaves a forest."""

    if f.n == 0 or is_forest(f):
        return True
    return any(
        is_forest(induced_subgraph(f, [u for u in range(f.n) if u != v])) for v in range(f.n)
    )

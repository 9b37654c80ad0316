"""Small-graph isomorphism and forest tests."""

from __future__ import annotations

from typing import Dict, List, Optional

from ...shared.config import BudgetConfig
from ..graphs import Graph, connected_components, disjoint_union
from ..refinement.base import MethodId, MethodSpec
from ..refinement.engines import ColorRefinement
from .counting import OracleBudgetExceededError, _bfs_order


def is_iso_bruteforce(f: Graph, g: Graph, *, budget: Optional[BudgetConfig] = None) -> bool:
    """Exact isomorphism test by pruned backtracking.

    Degree sequences and a joint 1-WL colouring filter first; candidates for a
    vertex are restricted to its 1-WL class, and each extension checks edges
    and non-edges against everything already mapped.
    """

    max_n = (budget or BudgetConfig()).iso_max_n
    if max(f.n, g.n) > max_n:
        raise OracleBudgetExceededError(f"isomorphism search limited to n <= {max_n}")
    if f.n != g.n or f.m != g.m or f.degree_sequence() != g.degree_sequence():
        return False
    if f.n == 0:
        return True

    union = disjoint_union(f, g)
    colors = ColorRefinement(MethodSpec(MethodId.WL1)).refine(union).stable.colors.tolist()
    f_colors, g_colors = colors[: f.n], colors[f.n:]
    if sorted(f_colors) != sorted(g_colors):
        return False

    by_color: Dict[int, List[int]] = {}
    for w, color in enumerate(g_colors):
        by_color.setdefault(color, []).append(w)

    order: List[int] = []
    for component in connected_components(f):
        order.extend(_bfs_order(f, component))

    image: Dict[int, int] = {}
    used = [False] * g.n

    def extend(depth: int) -> bool:
        if depth == len(order):
            return True
        v = order[depth]
        for w in by_color[f_colors[v]]:
            if used[w]:
                continue
            if any(f.has_edge(v, u) != g.has_edge(w, image[u]) for u in order[:depth]):
                continue
            image[v] = w
            used[w] = True
            if extend(depth + 1):
                return True
            used[w] = False
            del image[v]
        return False

    return extend(0)


def is_forest(g: Graph) -> bool:
    """Acyclic iff m = n - #components."""

    return g.m == g.n - len(connected_components(g))

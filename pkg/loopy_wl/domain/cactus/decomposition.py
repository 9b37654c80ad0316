"""Canonical width-2 tree decomposition of (fan) cacti."""

from __future__ import annotations

import json
import logging
from collections import deque
from dataclasses import dataclass
from typing import Any, Dict, FrozenSet, List, Optional, Tuple

from ...shared.dto import TreeDecompositionReport
from ..graphs import Graph, induced_subgraph
from ..validation import DecompositionSubject, RuleSetId, ValidationEngine, blocking, default_engine
from .recognition import DisconnectedGraphError, FanBlock, bfs_distances, fan_blocks

logger = logging.getLogger(__name__)

NODE = "node"
TREE_EDGE = "tree-edge"
CYCLE = "cycle"


@dataclass(frozen=True, slots=True)
class TreeDecomposition:
    tree: Graph
    bags: Tuple[FrozenSet[int], ...]
    root: int
    kinds: Tuple[str, ...] = ()

    @property
    def width(self) -> int:
        return max((len(bag) for bag in self.bags), default=0) - 1

    def bfs_order(self) -> Tuple[List[int], List[int]]:
        """(nodes in BFS order from the root, parent of each node; -1 for the root)."""

        parent = [-1] * self.tree.n
        if self.tree.n == 0:
            return [], parent
        seen = [False] * self.tree.n
        seen[self.root] = True
        order = [self.root]
        queue = deque([self.root])
        while queue:
            x = queue.popleft()
            for y in self.tree.adj[x]:
                if not seen[y]:
                    seen[y] = True
                    parent[y] = x
                    order.append(y)
                    queue.append(y)
        return order, parent

    def to_dict(self) -> Dict[str, Any]:
        return {
            "nodes": list(range(self.tree.n)),
            "edges": [list(edge) for edge in self.tree.edges()],
            "bags": [sorted(bag) for bag in self.bags],
            "kinds": list(self.kinds),
            "root": self.root,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, payload: Dict[str, Any]) -> TreeDecomposition:
        count = len(payload["nodes"])
        return cls(
            tree=Graph.from_edges(count, payload["edges"]),
            bags=tuple(frozenset(bag) for bag in payload["bags"]),
            root=int(payload["root"]),
            kinds=tuple(payload.get("kinds", ())),
        )

    @classmethod
    def from_json(cls, text: str) -> TreeDecomposition:
        return cls.from_dict(json.loads(text))


def _orient_blocks(
    g: Graph, blocks: List[FanBlock], dist: List[int]
) -> Tuple[List[FanBlock], Dict[int, str]]:
    """Fix each cycle's direction by the smaller sequence of (chord flag, rooted sub-cactus code).

    Also returns the code of the sub-cactus hanging at every vertex.
    """

    children: Dict[int, List[int]] = {v: [] for v in range(g.n)}
    for index, block in enumerate(blocks):
        children[block.top].append(index)

    codes: Dict[int, str] = {}
    oriented: List[Optional[FanBlock]] = [None] * len(blocks)
    block_codes: Dict[int, str] = {}

    for v in sorted(range(g.n), key=lambda x: -dist[x]):
        parts = []
        for index in children[v]:
            block = blocks[index]
            if block.kind == "bridge":
                oriented[index] = block
                block_codes[index] = f"B[{codes[block.cycle[1]]}]"
            else:
                chords = set(block.chords)
                forward = list(block.lower)
                backward = forward[::-1]
                seq_f = [f"{int(x in chords)}{codes[x]}" for x in forward]
                seq_b = [f"{int(x in chords)}{codes[x]}" for x in backward]
                chosen, seq = (forward, seq_f) if seq_f <= seq_b else (backward, seq_b)
                oriented[index] = FanBlock("cycle", (v, *chosen), block.chords)
                block_codes[index] = "C[" + "|".join(seq) + "]"
            parts.append(block_codes[index])
        codes[v] = "V[" + ",".join(sorted(parts)) + "]"
    return [block for block in oriented if block is not None], codes


def rooted_cactus_code(g: Graph, root: int) -> str:
    """Canonical string of a rooted fan cactus; equal for isomorphic rooted inputs."""

    dist = bfs_distances(g, root)
    _, codes = _orient_blocks(g, fan_blocks(g, root), dist)
    return codes[root]


def canonical_tree_decomposition(g: Graph, root: int) -> TreeDecomposition:
    """Node gadgets, tree-edge gadgets and cycle gadgets glued along the block structure.

    Vertex v owns tree node v (bag {v}). A bridge {v, w} adds a node {v, w}
    joined to both node gadgets. A cycle v0, v1, ..., v_{L-1} (v0 closest to
    the root) adds the path {v0,v1}, {v0,v1,v2}, {v0,v2}, ..., {v0,v_{L-1}};
    v0 and v1 hang off its first bag and v_i off the bag {v0, v_i}.
    """

    if g.n == 0:
        raise DisconnectedGraphError("tree decomposition needs at least one vertex")
    dist = bfs_distances(g, root)
    blocks, _ = _orient_blocks(g, fan_blocks(g, root), dist)

    bags: List[FrozenSet[int]] = [frozenset({v}) for v in range(g.n)]
    kinds: List[str] = [NODE] * g.n
    edges: List[Tuple[int, int]] = []

    def add(bag, kind: str) -> int:
        bags.append(frozenset(bag))
        kinds.append(kind)
        return len(bags) - 1

    for block in blocks:
        if block.kind == "bridge":
            v, w = block.cycle
            node = add((v, w), TREE_EDGE)
            edges.extend([(v, node), (w, node)])
            continue

        cycle = block.cycle
        length = len(cycle)
        v0 = cycle[0]
        chain: List[int] = []
        for j in range(1, 2 * length - 2):
            if j % 2:
                chain.append(add((v0, cycle[(j + 1) // 2]), CYCLE))
            else:
                chain.append(add((v0, cycle[j // 2], cycle[j // 2 + 1]), CYCLE))
        edges.extend(zip(chain, chain[1:]))
        edges.append((v0, chain[0]))
        for i in range(1, length):
            edges.append((cycle[i], chain[2 * i - 2]))

    td = TreeDecomposition(
        tree=Graph.from_edges(len(bags), edges),
        bags=tuple(bags),
        root=root,
        kinds=tuple(kinds),
    )
    logger.debug(f"Decomposed n={g.n} into {td.tree.n} bags of width {td.width}")
    return td


def validate_tree_decomposition(
    g: Graph,
    td: TreeDecomposition,
    *,
    engine: Optional[ValidationEngine] = None,
) -> TreeDecompositionReport:
    """Check the decomposition axioms; ``first_violation`` names the first failing one."""

    engine = engine or default_engine()
    issues = engine.check(DecompositionSubject(graph=g, decomposition=td), RuleSetId.TREE_DECOMPOSITION)
    return TreeDecompositionReport(valid=not blocking(issues), width=td.width, issues=issues)


def td_depth(td: TreeDecomposition) -> int:
    """Depth where a tree step counts only if the parent or child bag is a singleton."""

    order, parent = td.bfs_order()
    depth = [0] * td.tree.n
    for x in order[1:]:
        p = parent[x]
        step = 1 if len(td.bags[x]) == 1 or len(td.bags[p]) == 1 else 0
        depth[x] = depth[p] + step
    return max(depth, default=0)


def td_canonical_code(td: TreeDecomposition, g: Graph) -> str:
    """AHU code of the rooted decomposition tree, nodes labelled by (kind, bag size, bag shape)."""

    order, parent = td.bfs_order()
    child_codes: Dict[int, List[str]] = {x: [] for x in order}
    code: Dict[int, str] = {}
    for x in reversed(order):
        bag = sorted(td.bags[x])
        shape = ",".join(str(d) for d in sorted(induced_subgraph(g, bag).degree_sequence()))
        kind = td.kinds[x] if td.kinds else ""
        code[x] = f"{kind}:{len(bag)}:{shape}(" + ",".join(sorted(child_codes[x])) + ")"
        if parent[x] >= 0:
            child_codes[parent[x]].append(code[x])
    return code[td.root] if order else ""

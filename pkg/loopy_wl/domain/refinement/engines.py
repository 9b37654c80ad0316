"""Colour-refinement engines: 1-WL, r-loopy WL and k-tuple WL."""

from __future__ import annotations

import logging
from collections import Counter
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..graphs import Graph
from ..paths import PathNeighborhood, precompute_all
from .base import (
    UNIFORM_TOKEN,
    ColorTable,
    Coloring,
    MethodId,
    MethodNotSupportedError,
    MethodSpec,
    PairOutcome,
    RefinementEngine,
    RefinementResult,
    TupleLimitExceededError,
    digest,
)

logger = logging.getLogger(__name__)

Segments = Sequence[Tuple[int, int]]


def _initial_coloring(n: int, labels: Optional[Sequence[Any]]) -> Tuple[np.ndarray, List[str]]:
    if labels is None:
        return np.zeros(n, dtype=np.int64), ([UNIFORM_TOKEN] if n else [])
    if len(labels) != n:
        raise ValueError(f"{len(labels)} labels for n={n}")
    keys = [repr(label) for label in labels]
    ordered = sorted(set(keys))
    index = {key: i for i, key in enumerate(ordered)}
    colors = np.fromiter((index[key] for key in keys), dtype=np.int64, count=n)
    return colors, [digest(("label", key)) for key in ordered]


def _representatives(colors: np.ndarray) -> np.ndarray:
    """First position of every colour id (ids are dense)."""
    _, first = np.unique(colors, return_index=True)
    return first


def _run(
    method: str,
    colors: np.ndarray,
    tokens: List[str],
    rounds: int,
    step: Callable[[np.ndarray], np.ndarray],
    tokenize: Callable[[np.ndarray, List[str], np.ndarray], List[str]],
) -> RefinementResult:
    history = [Coloring(colors=colors, round=0)]
    token_history = [tokens]
    if colors.size == 0:
        return RefinementResult(method=method, history=history, tokens=token_history)

    for t in range(1, rounds + 1):
        previous = history[-1]
        refined = step(previous.colors)
        token_history.append(tokenize(previous.colors, token_history[-1], refined))
        history.append(Coloring(colors=refined, round=t))
        if history[-1].num_colors == previous.num_colors:
            break
    logger.debug(f"{method}: {len(history) - 1} rounds, {history[-1].num_colors} colours")
    return RefinementResult(method=method, history=history, tokens=token_history)


class _CSR:
    """Neighbour lists flattened with an owner column, for vectorised multisets."""

    def __init__(self, g: Graph) -> None:
        degrees = np.fromiter((len(row) for row in g.adj), dtype=np.int64, count=g.n)
        self.offsets = np.zeros(g.n + 1, dtype=np.int64)
        np.cumsum(degrees, out=self.offsets[1:])
        self.targets = np.fromiter(
            (u for row in g.adj for u in row), dtype=np.int64, count=int(self.offsets[-1])
        )
        self.owner = np.repeat(np.arange(g.n, dtype=np.int64), degrees)
        self.degrees = degrees

    def sorted_values(self, values: np.ndarray) -> np.ndarray:
        gathered = values[self.targets]
        return gathered[np.lexsort((gathered, self.owner))]


class ColorRefinement(RefinementEngine):
    """Classic 1-WL: c(v) <- (c(v), {{c(u) : u in N(v)}})."""

    method_id = MethodId.WL1

    def refine(self, g, *, labels=None, segments=None) -> RefinementResult:
        colors, tokens = _initial_coloring(g.n, labels)
        csr = _CSR(g)

        def step(current: np.ndarray) -> np.ndarray:
            table = ColorTable()
            neighbour_colors = csr.sorted_values(current)
            out = np.empty(g.n, dtype=np.int64)
            for v in range(g.n):
                start, stop = csr.offsets[v], csr.offsets[v + 1]
                signature = np.concatenate(([current[v]], neighbour_colors[start:stop]))
                out[v] = table.intern(signature.tobytes())
            return out

        def tokenize(previous: np.ndarray, prev_tokens: List[str], refined: np.ndarray) -> List[str]:
            out = []
            for v in _representatives(refined):
                neighbours = sorted(prev_tokens[previous[u]] for u in g.adj[v])
                out.append(digest(("wl1", prev_tokens[previous[v]], neighbours)))
            return out

        return _run(self.label, colors, tokens, self.max_rounds(g.n), step, tokenize)


class LoopyRefinement(RefinementEngine):
    """r-loopy WL: 1-WL plus, per q <= r, the multiset of colour tuples along N_q(v).

    With ``atp`` each path entry also carries its adjacency to v, and each
    vertex sees the colour histogram of its segment; together with c(v) and
    the neighbour multiset that histogram determines {{(atp(v,u), c(u)) : u in V}}.
    """

    method_id = MethodId.LOOPY

    def __init__(self, spec: MethodSpec, *, path_budget: Optional[int] = None) -> None:
        super().__init__(spec)
        if spec.r < 0:
            raise ValueError("r must be non-negative")
        self.path_budget = path_budget

    def neighborhood(self, g: Graph) -> PathNeighborhood:
        return precompute_all(g, self.spec.r, budget=self.path_budget)

    def refine(self, g, *, labels=None, segments=None, pn: Optional[PathNeighborhood] = None) -> RefinementResult:
        r = self.spec.r
        if pn is None:
            pn = self.neighborhood(g)
        pn.ensure_matches(g, r)

        colors, tokens = _initial_coloring(g.n, labels)
        csr = _CSR(g)
        atp = self.spec.atp
        segment_of, segment_bounds = _segment_index(g.n, segments)
        adjacency = g.adjacency_matrix() if atp and r > 0 else None

        owners: Dict[int, np.ndarray] = {}
        adjacency_bits: Dict[int, np.ndarray] = {}
        for q in range(1, r + 1):
            offsets = pn.offsets[q]
            owners[q] = np.repeat(np.arange(g.n, dtype=np.int64), np.diff(offsets))
            if adjacency is not None:
                adjacency_bits[q] = adjacency[owners[q][:, None], pn.path_arrays[q]]

        def step(current: np.ndarray) -> np.ndarray:
            neighbour_colors = csr.sorted_values(current)
            path_blocks = {}
            for q in range(1, r + 1):
                values = current[pn.path_arrays[q]]
                if adjacency is not None:
                    values = values * 3 + adjacency_bits[q]
                keys = [values[:, j] for j in range(q, -1, -1)] + [owners[q]]
                path_blocks[q] = values[np.lexsort(keys)] if len(values) else values
            segment_bytes = (
                [np.bincount(current[lo:hi], minlength=0).tobytes() for lo, hi in segment_bounds]
                if atp
                else None
            )

            table = ColorTable()
            out = np.empty(g.n, dtype=np.int64)
            for v in range(g.n):
                header = [current[v], csr.degrees[v]]
                header.extend(pn.offsets[q][v + 1] - pn.offsets[q][v] for q in range(1, r + 1))
                parts = [
                    np.asarray(header, dtype=np.int64).tobytes(),
                    neighbour_colors[csr.offsets[v]:csr.offsets[v + 1]].tobytes(),
                ]
                for q in range(1, r + 1):
                    lo, hi = pn.offsets[q][v], pn.offsets[q][v + 1]
                    parts.append(path_blocks[q][lo:hi].tobytes())
                if segment_bytes is not None:
                    parts.append(segment_bytes[segment_of[v]])
                out[v] = table.intern(b"".join(parts))
            return out

        def tokenize(previous: np.ndarray, prev_tokens: List[str], refined: np.ndarray) -> List[str]:
            def entry(v: int, u: int) -> Any:
                token = prev_tokens[previous[u]]
                return (int(adjacency[v, u]), token) if adjacency is not None else token

            out = []
            for v in _representatives(refined):
                neighbours = sorted(prev_tokens[previous[u]] for u in g.adj[v])
                loops = [
                    sorted(tuple(entry(v, u) for u in row) for row in pn.paths(v, q).tolist())
                    for q in range(1, r + 1)
                ]
                payload: List[Any] = ["loopy", prev_tokens[previous[v]], neighbours, loops]
                if atp:
                    lo, hi = segment_bounds[segment_of[v]]
                    payload.append(sorted(Counter(prev_tokens[c] for c in previous[lo:hi].tolist()).items()))
                out.append(digest(tuple(payload)))
            return out

        return _run(self.label, colors, tokens, self.max_rounds(g.n), step, tokenize)


def _segment_index(n: int, segments: Optional[Segments]) -> Tuple[np.ndarray, List[Tuple[int, int]]]:
    bounds = list(segments) if segments else [(0, n)]
    segment_of = np.zeros(n, dtype=np.int64)
    for index, (lo, hi) in enumerate(bounds):
        segment_of[lo:hi] = index
    return segment_of, bounds


class TupleRefinement(RefinementEngine):
    """k-WL over all k-tuples.

    The default ``oblivious`` variant keeps, per position j, the multiset of
    colours obtained by replacing coordinate j. The ``literal`` variant runs
    plain WL on the graph whose edges join tuples that differ in exactly one
    position, so the k per-position multisets are merged into one.
    """

    method_id = MethodId.KWL

    def __init__(self, spec: MethodSpec, *, tuple_limit: int = 1_000_000) -> None:
        super().__init__(spec)
        if spec.k < 2:
            raise MethodNotSupportedError(f"kwl needs k >= 2, got {spec.k}")
        if spec.kwl_variant not in ("oblivious", "literal"):
            raise MethodNotSupportedError(f"unknown kwl variant {spec.kwl_variant!r}")
        self.tuple_limit = tuple_limit

    def max_rounds(self, n: int) -> int:
        cap = self.spec.max_iters
        total = max(n ** self.spec.k, 1)
        return min(cap, total) if cap > 0 else total

    def _signature_width(self, n: int) -> int:
        if self.spec.kwl_variant == "literal":
            return 1 + self.spec.k * n
        return 1 + self.spec.k

    def _check_limit(self, n: int, copies: int = 1) -> None:
        """Oblivious rounds store k+1 ids per tuple; literal rounds store the whole merged fibre, charged per cell."""

        tuples = copies * n ** self.spec.k
        charged = tuples if self.spec.kwl_variant == "oblivious" else tuples * self._signature_width(n)
        if charged > self.tuple_limit:
            raise TupleLimitExceededError(
                f"{copies} x {n}^{self.spec.k} tuples ({charged} charged) exceed the limit of {self.tuple_limit}"
            )

    def _atomic_codes(self, g: Graph, labels: Optional[Sequence[Any]]) -> np.ndarray:
        """Equality/adjacency pattern of every tuple, read position-wise (2 equal, 1 adjacent, 0 neither)."""

        k, n = self.spec.k, g.n
        atomic = g.adjacency_matrix() + 2 * np.eye(n, dtype=np.int64)
        grid = np.indices((n,) * k, dtype=np.int64)
        codes = np.zeros((n,) * k, dtype=np.int64)
        for i in range(k):
            for j in range(i + 1, k):
                codes = codes * 3 + atomic[grid[i], grid[j]]
        if labels is not None:
            label_ids, _ = _initial_coloring(n, labels)
            width = int(label_ids.max()) + 1 if n else 1
            for i in range(k):
                codes = codes * width + label_ids[grid[i]]
        return codes

    def _signatures(self, *colorings: np.ndarray) -> np.ndarray:
        """Stacked signature rows of every tuple of every coloring, over one shared id space."""

        k = self.spec.k
        n = colorings[0].shape[0]
        size = n ** k
        if self.spec.kwl_variant == "literal":
            rows = []
            for colors in colorings:
                shape = (n,) * k + (n,)
                fibers = [
                    np.broadcast_to(np.expand_dims(np.sort(np.moveaxis(colors, j, -1), axis=-1), axis=j), shape)
                    for j in range(k)
                ]
                merged = np.sort(np.concatenate(fibers, axis=-1), axis=-1)
                rows.append(np.concatenate([colors[..., None], merged], axis=-1).reshape(size, -1))
            return np.vstack(rows)

        columns = [np.concatenate([colors.reshape(-1) for colors in colorings])]
        for j in range(k):
            fibers = [np.sort(np.moveaxis(colors, j, -1), axis=-1).reshape(-1, n) for colors in colorings]
            _, ids = np.unique(np.vstack(fibers), axis=0, return_inverse=True)
            ids = ids.reshape(len(colorings), *((n,) * (k - 1)))
            spread = np.broadcast_to(np.expand_dims(ids, axis=j + 1), (len(colorings),) + (n,) * k)
            columns.append(spread.reshape(-1))
        return np.stack(columns, axis=1)

    def _tokens(self, previous: np.ndarray, prev_tokens: List[str], first: np.ndarray) -> List[str]:
        k = self.spec.k
        n = previous.shape[0]
        out = []
        for flat_index in first:
            position = np.unravel_index(int(flat_index), (n,) * k)
            fibers = []
            for j in range(k):
                index = list(position)
                index[j] = slice(None)
                fibers.append(sorted(prev_tokens[c] for c in previous[tuple(index)].tolist()))
            if self.spec.kwl_variant == "literal":
                fibers = [sorted(token for fiber in fibers for token in fiber)]
            out.append(digest(("kwl", prev_tokens[previous[position]], fibers)))
        return out

    def refine(self, g, *, labels=None, segments=None) -> RefinementResult:
        n, k = g.n, self.spec.k
        self._check_limit(n)
        codes = self._atomic_codes(g, labels)
        values, inverse = np.unique(codes.reshape(-1), return_inverse=True)
        colors = inverse.reshape((n,) * k).astype(np.int64)
        tokens = [digest(("atomic", int(value))) for value in values]

        history = [Coloring(colors=colors.reshape(-1), round=0)]
        token_history = [tokens]
        current = colors
        for t in range(1, self.max_rounds(n) + 1 if n else 1):
            _, first, inverse = np.unique(self._signatures(current), axis=0, return_index=True, return_inverse=True)
            refined = inverse.reshape((n,) * k).astype(np.int64)
            token_history.append(self._tokens(current, token_history[-1], first))
            history.append(Coloring(colors=refined.reshape(-1), round=t))
            current = refined
            if history[-1].num_colors == history[-2].num_colors:
                break
        return RefinementResult(method=self.label, history=history, tokens=token_history)

    def refine_pair(self, g: Graph, h: Graph, *, trace: bool = False) -> PairOutcome:
        """Lockstep refinement of both graphs with one shared id space."""

        k = self.spec.k
        if g.n != h.n:
            return PairOutcome(histogram_g={0: g.n ** k}, histogram_h={0: h.n ** k}, iterations=0)
        n = g.n
        self._check_limit(n, copies=2)
        size = n ** k
        codes = np.concatenate([self._atomic_codes(g, None).reshape(-1), self._atomic_codes(h, None).reshape(-1)])
        _, joint = np.unique(codes, return_inverse=True)
        joint = joint.reshape(-1).astype(np.int64)
        count = int(joint.max()) + 1 if joint.size else 0

        rounds = 0
        rounds_trace = []
        for _ in range(self.max_rounds(n) if n else 0):
            left = joint[:size].reshape((n,) * k)
            right = joint[size:].reshape((n,) * k)
            stacked = self._signatures(left, right)
            _, refined = np.unique(stacked, axis=0, return_inverse=True)
            refined = refined.reshape(-1).astype(np.int64)
            rounds += 1
            new_count = int(refined.max()) + 1
            if trace:
                rounds_trace.append({"round": rounds, "num_colors": new_count})
            joint = refined
            if new_count == count:
                break
            count = new_count

        left_hist = Counter(joint[:size].tolist())
        right_hist = Counter(joint[size:].tolist())
        return PairOutcome(
            histogram_g=dict(sorted(left_hist.items())),
            histogram_h=dict(sorted(right_hist.items())),
            iterations=rounds,
            trace=rounds_trace if trace else None,
        )

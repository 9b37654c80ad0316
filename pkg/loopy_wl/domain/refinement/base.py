"""Base contracts for colour-refinement engines."""

from __future__ import annotations

import hashlib
from abc import ABC, abstractmethod
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..graphs import Graph, disjoint_union


class MethodId(str, Enum):
    """Canonical identifiers for the supported refinement methods."""

    WL1 = "wl1"
    LOOPY = "loopy"
    KWL = "kwl"


class RefinementError(RuntimeError):
    """Raised when a refinement run cannot be carried out."""


class TupleLimitExceededError(RefinementError):
    """Raised when n^k exceeds the configured tuple limit."""


class MethodNotSupportedError(LookupError):
    """Raised when the factory cannot resolve an engine for a method."""


KWL_VARIANTS = ("oblivious", "literal")


@dataclass(frozen=True, slots=True)
class MethodSpec:
    """A method plus the parameters that select its strength."""

    method: MethodId
    r: int = 0
    k: int = 2
    atp: bool = False
    kwl_variant: str = "oblivious"
    max_iters: int = 0

    @classmethod
    def parse(cls, text: str, **overrides: Any) -> MethodSpec:
        """Parse ``wl1``, ``loopy:2`` or ``kwl:3``."""

        name, _, param = text.strip().lower().partition(":")
        try:
            method = MethodId(name)
        except ValueError as exc:
            raise MethodNotSupportedError(text) from exc
        values: Dict[str, Any] = {}
        if param:
            try:
                number = int(param)
            except ValueError as exc:
                raise MethodNotSupportedError(text) from exc
            if method is MethodId.LOOPY:
                values["r"] = number
            elif method is MethodId.KWL:
                values["k"] = number
            else:
                raise MethodNotSupportedError(text)
        values.update({key: value for key, value in overrides.items() if value is not None})
        return cls(method=method, **values)

    @property
    def label(self) -> str:
        if self.method is MethodId.LOOPY:
            suffix = ",atp" if self.atp else ""
            return f"loopy({self.r}{suffix})"
        if self.method is MethodId.KWL:
            suffix = ",literal" if self.kwl_variant == "literal" else ""
            return f"kwl({self.k}{suffix})"
        return "wl1"


@dataclass(slots=True)
class Coloring:
    """Dense colour ids 0..C-1 for every vertex (or tuple) at one round."""

    colors: np.ndarray
    round: int

    @property
    def num_colors(self) -> int:
        return int(self.colors.max()) + 1 if self.colors.size else 0

    def histogram(self) -> Dict[int, int]:
        values, counts = np.unique(self.colors, return_counts=True)
        return {int(v): int(c) for v, c in zip(values, counts)}


class ColorTable:
    """Exact intern table mapping signature bytes to fresh dense ids."""

    __slots__ = ("_ids",)

    def __init__(self) -> None:
        self._ids: Dict[bytes, int] = {}

    def intern(self, signature: bytes) -> int:
        color = self._ids.get(signature)
        if color is None:
            color = len(self._ids)
            self._ids[signature] = color
        return color

    def __len__(self) -> int:
        return len(self._ids)


def digest(payload: Any) -> str:
    """Run-independent token for a signature written over earlier tokens."""

    return hashlib.blake2b(repr(payload).encode("utf-8"), digest_size=16).hexdigest()


UNIFORM_TOKEN = digest(("uniform",))


@dataclass(slots=True)
class RefinementResult:
    """History of colourings plus canonical per-colour tokens."""

    method: str
    history: List[Coloring]
    tokens: List[List[str]] = field(default_factory=list)

    @property
    def stable(self) -> Coloring:
        return self.history[-1]

    @property
    def iterations(self) -> int:
        return len(self.history) - 1

    def coloring_at(self, round_index: int) -> Coloring:
        """Colouring at a round; rounds past stabilisation repeat the stable one."""
        return self.history[min(round_index, len(self.history) - 1)]

    def token_histogram(self, start: int = 0, stop: Optional[int] = None) -> Dict[str, int]:
        stable = self.stable
        tokens = self.tokens[stable.round]
        counts = Counter(tokens[c] for c in stable.colors[start:stop].tolist())
        return dict(sorted(counts.items()))

    @property
    def graph_invariant(self) -> str:
        histogram = self.token_histogram()
        body = ";".join(f"{token}x{count}" for token, count in histogram.items())
        return f"{self.method}|{body}"

    def trace(self) -> List[Dict[str, Any]]:
        """Per-round histograms over canonical tokens (JSON-serialisable)."""

        rounds = []
        for coloring in self.history:
            tokens = self.tokens[coloring.round]
            counts = Counter(tokens[c] for c in coloring.colors.tolist())
            rounds.append(
                {
                    "round": coloring.round,
                    "num_colors": coloring.num_colors,
                    "histogram": dict(sorted(counts.items())),
                }
            )
        return rounds


@dataclass(slots=True)
class PairOutcome:
    """Shared-id histograms of two graphs refined together."""

    histogram_g: Dict[int, int]
    histogram_h: Dict[int, int]
    iterations: int
    trace: Optional[List[Dict[str, Any]]] = None

    @property
    def distinguished(self) -> bool:
        return self.histogram_g != self.histogram_h


def split_histograms(coloring: Coloring, split: int) -> Tuple[Dict[int, int], Dict[int, int]]:
    colors = coloring.colors
    left = Counter(int(c) for c in colors[:split].tolist())
    right = Counter(int(c) for c in colors[split:].tolist())
    return dict(sorted(left.items())), dict(sorted(right.items()))


class RefinementEngine(ABC):
    """Defines one colour-refinement method."""

    method_id: MethodId

    def __init__(self, spec: MethodSpec) -> None:
        self.spec = spec

    @property
    def label(self) -> str:
        return self.spec.label

    def max_rounds(self, n: int) -> int:
        cap = self.spec.max_iters
        return min(cap, max(n, 1)) if cap > 0 else max(n, 1)

    @abstractmethod
    def refine(
        self,
        g: Graph,
        *,
        labels: Optional[Sequence[Any]] = None,
        segments: Optional[Sequence[Tuple[int, int]]] = None,
    ) -> RefinementResult:
        """Refine until the partition stops splitting (or the round cap)."""

    def refine_pair(self, g: Graph, h: Graph, *, trace: bool = False) -> PairOutcome:
        """Refine ``g`` and ``h`` with shared colour ids by running on their disjoint union."""

        union = disjoint_union(g, h)
        result = self.refine(union, segments=((0, g.n), (g.n, union.n)))
        left, right = split_histograms(result.stable, g.n)
        return PairOutcome(
            histogram_g=left,
            histogram_h=right,
            iterations=result.iterations,
            trace=result.trace() if trace else None,
        )

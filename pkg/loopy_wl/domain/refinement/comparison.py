"""Refinement entry points, pairwise comparison and run-independent fingerprints."""

from __future__ import annotations

import logging
from typing import Dict, Optional

import numpy as np

from ...shared.config import BudgetConfig
from ...shared.dto import ComparisonResult
from ..graphs import Graph
from ..paths import PathNeighborhood
from .base import MethodId, MethodSpec, RefinementResult
from .engines import ColorRefinement, LoopyRefinement, TupleRefinement
from .factory import RefinementFactory, default_factory

logger = logging.getLogger(__name__)


def wl1_refine(g: Graph, max_iters: int = 0) -> RefinementResult:
    return ColorRefinement(MethodSpec(MethodId.WL1, max_iters=max_iters)).refine(g)


def loopy_refine(
    g: Graph,
    pn: Optional[PathNeighborhood],
    r: int,
    max_iters: int = 0,
    *,
    atp: bool = False,
) -> RefinementResult:
    """Refine with r-loopy WL, reusing ``pn`` when it was built on ``g`` with pn.r >= r."""

    engine = LoopyRefinement(MethodSpec(MethodId.LOOPY, r=r, atp=atp, max_iters=max_iters))
    return engine.refine(g, pn=pn)


def kwl_refine(
    g: Graph,
    k: int,
    max_iters: int = 0,
    *,
    variant: str = "oblivious",
    tuple_limit: int = 1_000_000,
) -> RefinementResult:
    spec = MethodSpec(MethodId.KWL, k=k, kwl_variant=variant, max_iters=max_iters)
    return TupleRefinement(spec, tuple_limit=tuple_limit).refine(g)


def _histogram_keys(histogram: Dict[int, int]) -> Dict[str, int]:
    return {str(color): count for color, count in histogram.items()}


def compare_graphs(
    g: Graph,
    h: Graph,
    method: MethodSpec,
    *,
    factory: Optional[RefinementFactory] = None,
    trace: bool = False,
) -> ComparisonResult:
    """Refine both graphs with shared colour ids; distinguished iff their histograms differ."""

    factory = factory or default_factory()
    engine = factory.resolve(method)
    outcome = engine.refine_pair(g, h, trace=trace)
    logger.debug(
        f"{method.label}: distinguished={outcome.distinguished} after {outcome.iterations} rounds"
    )
    return ComparisonResult(
        method=method.label,
        distinguished=outcome.distinguished,
        iterations=outcome.iterations,
        invariant_g=_histogram_keys(outcome.histogram_g),
        invariant_h=_histogram_keys(outcome.histogram_h),
        trace=outcome.trace,
    )


def invariant_fingerprint(
    g: Graph,
    method: MethodSpec,
    *,
    factory: Optional[RefinementFactory] = None,
) -> str:
    """Canonical histogram of ``g`` alone, comparable across runs and processes."""

    factory = factory or default_factory()
    return factory.resolve(method).refine(g).graph_invariant


def minimal_distinguishing_r(
    g: Graph,
    h: Graph,
    r_max: int,
    *,
    atp: bool = False,
    factory: Optional[RefinementFactory] = None,
) -> Optional[int]:
    """Smallest r <= r_max for which loopy(r) separates g and h, or None."""

    factory = factory or default_factory(BudgetConfig(r_max=max(r_max, BudgetConfig().r_max)))
    for r in range(0, r_max + 1):
        if compare_graphs(g, h, MethodSpec(MethodId.LOOPY, r=r, atp=atp), factory=factory).distinguished:
            return r
    return None


def partition_refines(fine: np.ndarray, coarse: np.ndarray) -> bool:
    """True iff equal colours in ``fine`` imply equal colours in ``coarse``."""

    mapping: Dict[int, int] = {}
    for a, b in zip(fine.tolist(), coarse.tolist()):
        if mapping.setdefault(a, b) != b:
            return False
    return True


def same_partition(a: np.ndarray, b: np.ndarray) -> bool:
    return partition_refines(a, b) and partition_refines(b, a)

"""Colour-refinement engines and comparisons."""

from .base import (
    Coloring,
    ColorTable,
    MethodId,
    MethodNotSupportedError,
    MethodSpec,
    PairOutcome,
    RefinementEngine,
    RefinementError,
    RefinementResult,
    TupleLimitExceededError,
)
from .comparison import (
    compare_graphs,
    invariant_fingerprint,
    kwl_refine,
    loopy_refine,
    minimal_distinguishing_r,
    partition_refines,
    same_partition,
    wl1_refine,
)
from .engines import ColorRefinement, LoopyRefinement, TupleRefinement
from .factory import RefinementFactory, default_factory, register_default_engines, register_engine

__all__ = [
    "ColorRefinement",
    "ColorTable",
    "Coloring",
    "LoopyRefinement",
    "MethodId",
    "MethodNotSupportedError",
    "MethodSpec",
    "PairOutcome",
    "RefinementEngine",
    "RefinementError",
    "RefinementFactory",
    "RefinementResult",
    "TupleLimitExceededError",
    "TupleRefinement",
    "compare_graphs",
    "default_factory",
    "invariant_fingerprint",
    "kwl_refine",
    "loopy_refine",
    "minimal_distinguishing_r",
    "partition_refines",
    "register_default_engines",
    "register_engine",
    "same_partition",
    "wl1_refine",
]

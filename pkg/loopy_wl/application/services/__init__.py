"""Application use cases behind the CLI and the explorer."""

from .benchmark_service import BenchmarkService
from .comparison_workflow import ComparisonService
from .configuration import apply_overrides, load_config, validate_config
from .counting_service import COUNT_MODES, CountingService
from .decomposition_service import DecompositionService
from .sweep_service import SweepService, indistinguishable_pairs

__all__ = [
    "BenchmarkService",
    "COUNT_MODES",
    "ComparisonService",
    "CountingService",
    "DecompositionService",
    "SweepService",
    "apply_overrides",
    "indistinguishable_pairs",
    "load_config",
    "validate_config",
]

"""Shared configuration and DTOs."""

from .config import AppConfig, BudgetConfig, ConfigurationError, RefinementConfig, RuntimeConfig
from .dto import (
    SCHEMA_VERSION,
    BenchmarkReport,
    BenchmarkRow,
    ComparisonResult,
    CountResult,
    CycleRow,
    ReportEnvelope,
    SweepReport,
    SweepTimings,
    TreeDecompositionReport,
    ValidationIssue,
    ValidationSeverity,
)

__all__ = [
    "AppConfig",
    "BudgetConfig",
    "ConfigurationError",
    "RefinementConfig",
    "RuntimeConfig",
    "SCHEMA_VERSION",
    "BenchmarkReport",
    "BenchmarkRow",
    "ComparisonResult",
    "CountResult",
    "CycleRow",
    "ReportEnvelope",
    "SweepReport",
    "SweepTimings",
    "TreeDecompositionReport",
    "ValidationIssue",
    "ValidationSeverity",
]

"""Shared data transfer objects for refinement, counting and reporting."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from enum import Enum
from typing import Any, Dict, List, Mapping, Optional

SCHEMA_VERSION = 1


class ValidationSeverity(str, Enum):
    """Severity levels returned by the validation engine."""

    ERROR = "error"
    WARNING = "warning"
    INFO = "info"


@dataclass(slots=True)
class ValidationIssue:
    """Represents a rule violation or advisory detected during validation."""

    code: str
    message: str
    severity: ValidationSeverity
    details: Mapping[str, float | str] = field(default_factory=dict)


@dataclass(slots=True)
class CountResult:
    """Exact oracle count with the time it took."""

    value: int
    elapsed: float = 0.0
    nodes_explored: int = 0

    def __post_init__(self) -> None:
        if self.value < 0:
            raise ValueError("counts are non-negative")


@dataclass(slots=True)
class ComparisonResult:
    """Outcome of a pairwise refinement comparison."""

    method: str
    distinguished: bool
    iterations: int
    invariant_g: Dict[str, int]
    invariant_h: Dict[str, int]
    trace: Optional[List[Dict[str, Any]]] = None

    def to_dict(self) -> Dict[str, Any]:
        payload = asdict(self)
        if self.trace is None:
            payload.pop("trace")
        return payload


@dataclass(slots=True)
class SweepTimings:
    """Wall times of a dataset sweep, in seconds."""

    parse: float = 0.0
    precompute: float = 0.0
    refine: float = 0.0


@dataclass(slots=True)
class SweepReport:
    """Fingerprint bucketing of a dataset under one method."""

    dataset_id: str
    method: str
    graph_count: int
    buckets: Dict[str, int]
    indistinguishable_pairs: int
    timings: SweepTimings = field(default_factory=SweepTimings)
    pairwise_indistinguishable: Optional[int] = None
    pair_mode_distinguished: Optional[int] = None
    pair_mode_total: Optional[int] = None

    @property
    def bucket_count(self) -> int:
        return len(self.buckets)

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


@dataclass(slots=True)
class CycleRow:
    """One row of the cycle table: sub(C_L, g) read off the path neighbourhoods."""

    length: int
    count: int
    distinct: int = 0
    oracle: Optional[int] = None


@dataclass(slots=True)
class BenchmarkRow:
    """Per-graph timings of neighbourhood precomputation and refinement."""

    index: int
    n: int
    m: int
    precompute_s: float
    refine_s: float
    path_statistics: Dict[str, int] = field(default_factory=dict)
    total_paths: int = 0
    message_cost: int = 0
    budget_exceeded: bool = False


@dataclass(slots=True)
class BenchmarkReport:
    """Aggregate of a benchmark run."""

    r: int
    rows: List[BenchmarkRow]
    total_precompute_s: float
    total_refine_s: float
    total_paths: int
    total_edges: int
    budget_exceeded: int

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


@dataclass(slots=True)
class TreeDecompositionReport:
    """Validation outcome for a tree decomposition."""

    valid: bool
    width: int
    issues: List[ValidationIssue] = field(default_factory=list)

    @property
    def first_violation(self) -> Optional[ValidationIssue]:
        for issue in self.issues:
            if issue.severity == ValidationSeverity.ERROR:
                return issue
        return None

    def to_dict(self) -> Dict[str, Any]:
        first = self.first_violation
        return {
            "valid": self.valid,
            "width": self.width,
            "first_violation": first.code if first else None,
            "issues": [
                {
                    "code": issue.code,
                    "message": issue.message,
                    "severity": issue.severity.value,
                    "details": dict(issue.details),
                }
                for issue in self.issues
            ],
        }


@dataclass(slots=True)
class ReportEnvelope:
    """Schema-versioned wrapper written by every report-producing command."""

    command: str
    config: Mapping[str, Any]
    results: Any
    schema_version: int = SCHEMA_VERSION

    def to_dict(self) -> Dict[str, Any]:
        return {
            "schema_version": self.schema_version,
            "command": self.command,
            "config": dict(self.config),
            "results": self.results,
        }

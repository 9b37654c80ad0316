"""Configuration management for the toolkit."""

from __future__ import annotations

import os
from dataclasses import asdict, dataclass, field
from typing import Any, Dict, Iterable, List, Optional

try:
    from dotenv import load_dotenv
    DOTENV_AVAILABLE = True
except ImportError:
    DOTENV_AVAILABLE = False

from .dto import ValidationIssue


class ConfigurationError(ValueError):
    """Raised when configuration values violate a blocking rule."""

    def __init__(self, issues: Iterable[ValidationIssue]):
        self.issues: List[ValidationIssue] = list(issues)
        message = ", ".join(issue.code for issue in self.issues) or "invalid configuration"
        super().__init__(message)


def _env_bool(name: str, default: bool = False) -> bool:
    value = os.getenv(name)
    if value is None:
        return default
    return value.strip().lower() in {"1", "true", "yes", "on"}


@dataclass
class RefinementConfig:
    """Default refinement parameters."""

    r: int = 1
    k: int = 3
    max_iters: int = 0  # 0 = until the partition is stable
    atp: bool = False
    kwl_variant: str = "oblivious"


@dataclass
class BudgetConfig:
    """Size guards for the exponential parts of the toolkit."""

    path_budget: int = 5_000_000
    r_max: int = 8
    kwl_tuple_limit: int = 1_000_000
    hom_pattern_max_n: int = 12
    hom_host_max_n: int = 64
    iso_max_n: int = 16
    spasm_max_n: int = 8
    cycle_max_len: int = 10


@dataclass
class RuntimeConfig:
    """Process-level settings."""

    threads: int = 1
    output_format: str = "json"
    seed: int = 0
    log_level: str = "INFO"


@dataclass
class AppConfig:
    """Application configuration."""

    refinement: RefinementConfig = field(default_factory=RefinementConfig)
    budget: BudgetConfig = field(default_factory=BudgetConfig)
    runtime: RuntimeConfig = field(default_factory=RuntimeConfig)

    @classmethod
    def from_env(cls, env_file: Optional[str] = None) -> AppConfig:
        """Load configuration from environment variables."""
        if DOTENV_AVAILABLE:
            load_dotenv(env_file or ".env")

        refinement = RefinementConfig(
            r=int(os.getenv("LOOPY_WL_R", "1")),
            k=int(os.getenv("LOOPY_WL_K", "3")),
            max_iters=int(os.getenv("LOOPY_WL_MAX_ITERS", "0")),
            atp=_env_bool("LOOPY_WL_ATP"),
            kwl_variant=os.getenv("LOOPY_WL_KWL_VARIANT", "oblivious"),
        )

        budget = BudgetConfig(
            path_budget=int(os.getenv("LOOPY_WL_PATH_BUDGET", "5000000")),
            r_max=int(os.getenv("LOOPY_WL_R_MAX", "8")),
            kwl_tuple_limit=int(os.getenv("LOOPY_WL_KWL_TUPLE_LIMIT", "1000000")),
            hom_pattern_max_n=int(os.getenv("LOOPY_WL_HOM_PATTERN_MAX_N", "12")),
            hom_host_max_n=int(os.getenv("LOOPY_WL_HOM_HOST_MAX_N", "64")),
            iso_max_n=int(os.getenv("LOOPY_WL_ISO_MAX_N", "16")),
            spasm_max_n=int(os.getenv("LOOPY_WL_SPASM_MAX_N", "8")),
            cycle_max_len=int(os.getenv("LOOPY_WL_CYCLE_MAX_LEN", "10")),
        )

        default_level = "DEBUG" if os.getenv("DEBUG") else "INFO"
        runtime = RuntimeConfig(
            threads=int(os.getenv("LOOPY_WL_THREADS", "1")),
            output_format=os.getenv("LOOPY_WL_OUTPUT_FORMAT", "json"),
            seed=int(os.getenv("LOOPY_WL_SEED", "0")),
            log_level=os.getenv("LOOPY_WL_LOG_LEVEL", default_level).upper(),
        )

        return cls(refinement=refinement, budget=budget, runtime=runtime)

    def to_dict(self) -> Dict[str, Any]:
        """Flat-enough view embedded in every report."""
        return asdict(self)

"""Orchestrates pairwise comparisons and minimal-r searches."""

from __future__ import annotations

import logging
from collections.abc import Callable
from typing import List, Optional

from loopy_wl.domain.graphs import Graph
from loopy_wl.domain.ports import NullReportRepository, ReportRepository
from loopy_wl.domain.refinement import (
    MethodSpec,
    RefinementFactory,
    compare_graphs,
    invariant_fingerprint,
    minimal_distinguishing_r,
)
from loopy_wl.shared.config import AppConfig
from loopy_wl.shared.dto import ComparisonResult, ReportEnvelope

logger = logging.getLogger(__name__)


class ComparisonService:
    """Facade over refinement comparisons that records each run."""

    def __init__(
        self,
        *,
        factory: RefinementFactory,
        config: Optional[AppConfig] = None,
        repository: Optional[ReportRepository] = None,
    ) -> None:
        self._factory = factory
        self._config = config or AppConfig()
        self._repository = repository or NullReportRepository()
        self._post_run_callbacks: List[Callable[[ComparisonResult], None]] = []

    def register_post_run_callback(self, callback: Callable[[ComparisonResult], None]) -> None:
        self._post_run_callbacks.append(callback)

    def compare(self, g: Graph, h: Graph, method: MethodSpec, *, trace: bool = False) -> ComparisonResult:
        result = compare_graphs(g, h, method, factory=self._factory, trace=trace)
        logger.info(
            f"{result.method}: {'distinguished' if result.distinguished else 'not distinguished'} "
            f"after {result.iterations} rounds"
        )
        self._repository.save(
            ReportEnvelope(command="compare", config=self._config.to_dict(), results=result.to_dict()),
            rows=[
                {
                    "method": result.method,
                    "distinguished": result.distinguished,
                    "iterations": result.iterations,
                    "colors_g": len(result.invariant_g),
                    "colors_h": len(result.invariant_h),
                }
            ],
        )
        for callback in self._post_run_callbacks:
            callback(result)
        return result

    def minimal_r(self, g: Graph, h: Graph, r_max: int, *, atp: bool = False) -> Optional[int]:
        """Smallest distinguishing r, searched upward from 0."""

        found = minimal_distinguishing_r(g, h, r_max, atp=atp, factory=self._factory)
        logger.info(f"Minimal distinguishing r (<= {r_max}): {found}")
        self._repository.save(
            ReportEnvelope(
                command="compare",
                config=self._config.to_dict(),
                results={"r_max": r_max, "atp": atp, "minimal_r": found},
            ),
            rows=[{"r_max": r_max, "atp": atp, "minimal_r": found}],
        )
        return found

    def fingerprint(self, g: Graph, method: MethodSpec) -> str:
        return invariant_fingerprint(g, method, factory=self._factory)

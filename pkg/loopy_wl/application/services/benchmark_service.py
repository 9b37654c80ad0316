"""Timing of path-neighbourhood precomputation and loopy refinement."""

from __future__ import annotations

import logging
import time
from collections.abc import Sequence
from dataclasses import asdict
from typing import Optional, Tuple

from loopy_wl.domain.graphs import Graph
from loopy_wl.domain.paths import PathBudgetExceededError, neighborhood_statistics, precompute_all
from loopy_wl.domain.ports import NullReportRepository, ReportRepository
from loopy_wl.domain.refinement import LoopyRefinement, MethodId, MethodSpec
from loopy_wl.infrastructure.worker_pool import ordered_map
from loopy_wl.shared.config import AppConfig
from loopy_wl.shared.dto import BenchmarkReport, BenchmarkRow, ReportEnvelope

logger = logging.getLogger(__name__)

BenchmarkTask = Tuple[int, Graph, int, Optional[int]]


def benchmark_task(task: BenchmarkTask) -> BenchmarkRow:
    index, graph, r, path_budget = task
    started = time.perf_counter()
    try:
        pn = precompute_all(graph, r, budget=path_budget)
    except PathBudgetExceededError as exc:
        logger.warning(f"Graph {index}: {exc}")
        return BenchmarkRow(
            index=index,
            n=graph.n,
            m=graph.m,
            precompute_s=time.perf_counter() - started,
            refine_s=0.0,
            budget_exceeded=True,
        )
    precomputed = time.perf_counter()
    LoopyRefinement(MethodSpec(MethodId.LOOPY, r=r)).refine(graph, pn=pn)
    statistics = neighborhood_statistics(pn)
    return BenchmarkRow(
        index=index,
        n=graph.n,
        m=graph.m,
        precompute_s=precomputed - started,
        refine_s=time.perf_counter() - precomputed,
        path_statistics=statistics,
        total_paths=statistics["total_paths"],
        message_cost=pn.message_cost(),
    )


class BenchmarkService:
    def __init__(
        self,
        *,
        config: Optional[AppConfig] = None,
        repository: Optional[ReportRepository] = None,
    ) -> None:
        self._config = config or AppConfig()
        self._repository = repository or NullReportRepository()

    def bench(self, graphs: Sequence[Graph], r: int, *, progress: bool = False) -> BenchmarkReport:
        if r > self._config.budget.r_max:
            raise ValueError(f"r={r} exceeds r_max={self._config.budget.r_max}")
        tasks = [(index, graph, r, self._config.budget.path_budget) for index, graph in enumerate(graphs)]
        rows = ordered_map(
            benchmark_task,
            tasks,
            threads=self._config.runtime.threads,
            desc=f"bench r={r}",
            progress=progress,
        )
        report = BenchmarkReport(
            r=r,
            rows=rows,
            total_precompute_s=sum(row.precompute_s for row in rows),
            total_refine_s=sum(row.refine_s for row in rows),
            total_paths=sum(row.total_paths for row in rows),
            total_edges=sum(row.m for row in rows),
            budget_exceeded=sum(1 for row in rows if row.budget_exceeded),
        )
        logger.info(
            f"Benchmarked {len(rows)} graphs at r={r}: precompute {report.total_precompute_s:.2f}s, "
            f"refine {report.total_refine_s:.2f}s, {report.total_paths} paths vs {report.total_edges} edges"
        )
        if report.budget_exceeded:
            logger.warning(f"{report.budget_exceeded} graphs exceeded the path budget")
        self._repository.save(
            ReportEnvelope(command="bench", config=self._config.to_dict(), results=report.to_dict()),
            rows=[_flat_row(row, r) for row in rows],
        )
        return report


def _flat_row(row: BenchmarkRow, r: int) -> dict:
    flat = asdict(row)
    statistics = flat.pop("path_statistics")
    flat.update({f"paths_q{q}": 0 for q in range(1, r + 1)})
    flat.update(statistics)
    return flat

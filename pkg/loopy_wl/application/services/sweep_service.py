"""Dataset sweeps: bucket graphs by their refinement fingerprint."""

from __future__ import annotations

import hashlib
import logging
import time
from collections import Counter
from collections.abc import Callable, Sequence
from itertools import combinations
from typing import List, Optional, Tuple

from loopy_wl.domain.graphs import Graph
from loopy_wl.domain.ports import NullReportRepository, ReportRepository
from loopy_wl.domain.refinement import LoopyRefinement, MethodSpec, compare_graphs, default_factory
from loopy_wl.infrastructure.worker_pool import ordered_map
from loopy_wl.shared.config import AppConfig, BudgetConfig
from loopy_wl.shared.dto import ReportEnvelope, SweepReport, SweepTimings

logger = logging.getLogger(__name__)

FingerprintTask = Tuple[Graph, MethodSpec, BudgetConfig]


def fingerprint_task(task: FingerprintTask) -> Tuple[str, float, float]:
    """Fingerprint one graph; returns (fingerprint, precompute seconds, refine seconds)."""

    graph, method, budget = task
    engine = default_factory(budget).resolve(method)
    start = time.perf_counter()
    pn = engine.neighborhood(graph) if isinstance(engine, LoopyRefinement) else None
    precomputed = time.perf_counter()
    result = engine.refine(graph, pn=pn) if pn is not None else engine.refine(graph)
    return result.graph_invariant, precomputed - start, time.perf_counter() - precomputed


def bucket_key(fingerprint: str) -> str:
    return hashlib.blake2b(fingerprint.encode("utf-8"), digest_size=16).hexdigest()


def indistinguishable_pairs(buckets: Counter) -> int:
    return sum(size * (size - 1) // 2 for size in buckets.values())


class SweepService:
    """Runs a method over a dataset and reports how many graph pairs it leaves unseparated."""

    def __init__(
        self,
        *,
        config: Optional[AppConfig] = None,
        repository: Optional[ReportRepository] = None,
    ) -> None:
        self._config = config or AppConfig()
        self._repository = repository or NullReportRepository()
        self._post_run_callbacks: List[Callable[[SweepReport], None]] = []

    def register_post_run_callback(self, callback: Callable[[SweepReport], None]) -> None:
        self._post_run_callbacks.append(callback)

    def fingerprints(self, graphs: Sequence[Graph], method: MethodSpec, *, progress: bool = False):
        tasks = [(graph, method, self._config.budget) for graph in graphs]
        return ordered_map(
            fingerprint_task,
            tasks,
            threads=self._config.runtime.threads,
            desc=method.label,
            progress=progress,
        )

    def sweep(
        self,
        graphs: Sequence[Graph],
        method: MethodSpec,
        *,
        dataset_id: str = "dataset",
        parse_seconds: float = 0.0,
        pairwise: bool = False,
        pairs: bool = False,
        progress: bool = False,
    ) -> SweepReport:
        """Bucket ``graphs`` by fingerprint.

        ``pairs`` treats the dataset as consecutive (G, H) pairs and counts how
        many of them are separated. ``pairwise`` additionally runs a joint
        comparison on every pair, which must agree with the fingerprints.
        """

        outcomes = self.fingerprints(graphs, method, progress=progress)
        fingerprints = [fingerprint for fingerprint, _, _ in outcomes]
        timings = SweepTimings(
            parse=parse_seconds,
            precompute=sum(pre for _, pre, _ in outcomes),
            refine=sum(ref for _, _, ref in outcomes),
        )
        buckets = Counter(bucket_key(fingerprint) for fingerprint in fingerprints)
        report = SweepReport(
            dataset_id=dataset_id,
            method=method.label,
            graph_count=len(graphs),
            buckets=dict(sorted(buckets.items())),
            indistinguishable_pairs=indistinguishable_pairs(buckets),
            timings=timings,
        )

        if pairs:
            report.pair_mode_total = len(graphs) // 2
            report.pair_mode_distinguished = sum(
                1 for i in range(0, len(graphs) - 1, 2) if fingerprints[i] != fingerprints[i + 1]
            )
        if pairwise:
            report.pairwise_indistinguishable = self._pairwise(graphs, method, pairs=pairs)

        logger.info(
            f"{dataset_id} under {method.label}: {len(graphs)} graphs, {report.bucket_count} classes, "
            f"{report.indistinguishable_pairs} indistinguishable pairs"
        )
        self._repository.save(
            ReportEnvelope(command="sweep", config=self._config.to_dict(), results=report.to_dict()),
            rows=[
                {"bucket": key, "size": size, "method": method.label, "dataset": dataset_id}
                for key, size in report.buckets.items()
            ],
        )
        for callback in self._post_run_callbacks:
            callback(report)
        return report

    def _pairwise(self, graphs: Sequence[Graph], method: MethodSpec, *, pairs: bool) -> int:
        factory = default_factory(self._config.budget)
        if pairs:
            candidates = [(i, i + 1) for i in range(0, len(graphs) - 1, 2)]
        else:
            candidates = list(combinations(range(len(graphs)), 2))
        unseparated = 0
        for i, j in candidates:
            if not compare_graphs(graphs[i], graphs[j], method, factory=factory).distinguished:
                unseparated += 1
        logger.debug(f"Pairwise check: {unseparated} of {len(candidates)} pairs not distinguished")
        return unseparated

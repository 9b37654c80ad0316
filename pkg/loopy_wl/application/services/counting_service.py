"""Homomorphism, subgraph and cycle counts for the CLI."""

from __future__ import annotations

import logging
from dataclasses import asdict
from typing import List, Optional

from loopy_wl.domain.graphs import Graph
from loopy_wl.domain.oracles import automorphism_count, cycle_pattern, hom_count, sub_count
from loopy_wl.domain.paths import precompute_all
from loopy_wl.domain.ports import NullReportRepository, ReportRepository
from loopy_wl.shared.config import AppConfig
from loopy_wl.shared.dto import CountResult, CycleRow, ReportEnvelope

logger = logging.getLogger(__name__)

COUNT_MODES = ("hom", "sub")


class CountingService:
    def __init__(
        self,
        *,
        config: Optional[AppConfig] = None,
        repository: Optional[ReportRepository] = None,
    ) -> None:
        self._config = config or AppConfig()
        self._repository = repository or NullReportRepository()

    def count(self, pattern: Graph, host: Graph, mode: str) -> CountResult:
        if mode not in COUNT_MODES:
            raise ValueError(f"Unknown count mode {mode!r}; expected one of {COUNT_MODES}")
        oracle = hom_count if mode == "hom" else sub_count
        result = oracle(pattern, host, budget=self._config.budget)
        logger.info(f"{mode}(F, G) = {result.value} in {result.elapsed:.3f}s")
        payload = {
            "mode": mode,
            "value": result.value,
            "elapsed": result.elapsed,
            "nodes_explored": result.nodes_explored,
        }
        # counts can exceed 64 bits; JSON keeps the exact integer
        self._repository.save(
            ReportEnvelope(command="count", config=self._config.to_dict(), results=payload),
            rows=[dict(payload, value=str(result.value))],
        )
        return result

    def cycles(self, host: Graph, max_len: int, *, verify: bool = False) -> List[CycleRow]:
        """sub(C_L, host) for L = 3..max_len as the total of |N_{L-2}(v)| over all v."""

        r = max_len - 2
        budget = self._config.budget
        if r > budget.r_max:
            raise ValueError(f"cycle length {max_len} needs r={r} > r_max={budget.r_max}")
        rows: List[CycleRow] = []
        if max_len >= 3:
            pn = precompute_all(host, r, budget=budget.path_budget)
            for length in range(3, max_len + 1):
                count = pn.total_paths(length - 2)
                pattern = cycle_pattern(length)
                oracle = sub_count(pattern, host, budget=budget).value if verify else None
                if oracle is not None and oracle != count:
                    logger.error(f"Cycle count mismatch at L={length}: paths give {count}, oracle {oracle}")
                rows.append(
                    CycleRow(length=length, count=count, distinct=count // automorphism_count(pattern), oracle=oracle)
                )
        self._repository.save(
            ReportEnvelope(
                command="cycles",
                config=self._config.to_dict(),
                results=[asdict(row) for row in rows],
            ),
            rows=[asdict(row) for row in rows],
        )
        return rows

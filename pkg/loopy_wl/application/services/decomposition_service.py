"""Canonical tree decompositions of fan cacti."""

from __future__ import annotations

import logging
from typing import Any, Dict, Optional

from loopy_wl.domain.cactus import (
    canonical_tree_decomposition,
    is_outerplanar,
    td_canonical_code,
    td_depth,
    validate_tree_decomposition,
)
from loopy_wl.domain.graphs import Graph
from loopy_wl.domain.ports import NullReportRepository, ReportRepository
from loopy_wl.domain.validation import ValidationEngine, default_engine
from loopy_wl.shared.config import AppConfig
from loopy_wl.shared.dto import ReportEnvelope

logger = logging.getLogger(__name__)


class DecompositionService:
    def __init__(
        self,
        *,
        config: Optional[AppConfig] = None,
        engine: Optional[ValidationEngine] = None,
        repository: Optional[ReportRepository] = None,
    ) -> None:
        self._config = config or AppConfig()
        self._engine = engine or default_engine()
        self._repository = repository or NullReportRepository()

    def decompose(self, g: Graph, root: int = 0, *, include_code: bool = False) -> Dict[str, Any]:
        """Build the decomposition rooted at ``root`` and validate it against ``g``."""

        td = canonical_tree_decomposition(g, root)
        report = validate_tree_decomposition(g, td, engine=self._engine)
        if not report.valid:
            logger.warning(f"Decomposition failed validation: {report.first_violation.code}")
        payload: Dict[str, Any] = {
            "decomposition": td.to_dict(),
            "report": report.to_dict(),
            "depth": td_depth(td),
            "outerplanar": is_outerplanar(g),
        }
        if include_code:
            payload["code"] = td_canonical_code(td, g)
        self._repository.save(
            ReportEnvelope(command="decompose", config=self._config.to_dict(), results=payload),
            rows=[
                {"node": x, "kind": td.kinds[x] if td.kinds else "", "bag": " ".join(map(str, sorted(bag)))}
                for x, bag in enumerate(td.bags)
            ],
        )
        return payload

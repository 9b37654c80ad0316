"""Domain ports that must be implemented by infrastructure adapters."""

from __future__ import annotations

from abc import ABC, abstractmethod
from typing import Any, Dict, List, Optional, Sequence

from ...shared.dto import ReportEnvelope


class ReportRepository(ABC):
    """Persistence port for command reports."""

    @abstractmethod
    def save(self, report: ReportEnvelope, *, rows: Optional[Sequence[Dict[str, Any]]] = None) -> None:
        """Persist a report; ``rows`` is the flat table used by tabular formats."""


class NullReportRepository(ReportRepository):
    """No-op repository used by library callers and tests."""

    def save(self, report: ReportEnvelope, *, rows: Optional[Sequence[Dict[str, Any]]] = None) -> None:  # pragma: no cover - no persistence
        return


class InMemoryReportRepository(ReportRepository):
    """Keeps reports and their flat tables in lists."""

    def __init__(self) -> None:
        self.reports: List[ReportEnvelope] = []
        self.tables: List[List[Dict[str, Any]]] = []

    def save(self, report: ReportEnvelope, *, rows: Optional[Sequence[Dict[str, Any]]] = None) -> None:
        self.reports.append(report)
        self.tables.append(list(rows or []))

"""Report writers: schema-versioned JSON, or flat CSV tables through pandas."""

from __future__ import annotations

import json
import logging
import sys
from pathlib import Path
from typing import Any, Dict, Optional, Sequence, TextIO

import pandas as pd

from loopy_wl.domain.ports import ReportRepository
from loopy_wl.shared.dto import ReportEnvelope

logger = logging.getLogger(__name__)

FORMATS = ("json", "csv")


class FileReportRepository(ReportRepository):
    """Writes each report to ``path`` (or to ``stream``, stdout by default)."""

    def __init__(
        self,
        *,
        output_format: str = "json",
        path: Optional[str | Path] = None,
        stream: Optional[TextIO] = None,
    ) -> None:
        if output_format not in FORMATS:
            raise ValueError(f"Unknown report format {output_format!r}")
        self.output_format = output_format
        self.path = Path(path) if path else None
        self.stream = stream

    def render(self, report: ReportEnvelope, rows: Optional[Sequence[Dict[str, Any]]] = None) -> str:
        if self.output_format == "csv":
            table = pd.DataFrame(list(rows) if rows is not None else [_flatten(report.results)])
            return table.to_csv(index=False)
        return json.dumps(report.to_dict(), indent=2, sort_keys=False, default=_json_default) + "\n"

    def save(self, report: ReportEnvelope, *, rows: Optional[Sequence[Dict[str, Any]]] = None) -> None:
        text = self.render(report, rows)
        if self.path is not None:
            self.path.write_text(text, encoding="utf-8")
            logger.info(f"Wrote {report.command} report to {self.path}")
            return
        (self.stream or sys.stdout).write(text)


def _flatten(results: Any) -> Dict[str, Any]:
    if isinstance(results, dict):
        return pd.json_normalize(results, sep=".").iloc[0].to_dict()
    return {"value": results}


def _json_default(value: Any) -> Any:
    if hasattr(value, "item"):
        return value.item()
    if hasattr(value, "value"):
        return value.value
    raise TypeError(f"Object of type {type(value).__name__} is not JSON serializable")

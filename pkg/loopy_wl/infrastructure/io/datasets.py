"""Dataset loading: .g6 files (one record per line) and edge-list fixtures."""

from __future__ import annotations

import logging
import os
from pathlib import Path
from typing import Iterator, List, Optional

from loopy_wl.domain.graphs import Graph

from .edgelist import parse_edge_list
from .graph6 import HEADER, Graph6FormatError, parse_graph6, write_graph6

logger = logging.getLogger(__name__)

EDGE_LIST_SUFFIXES = {".txt", ".edges", ".el"}


def iter_graph6_lines(lines) -> Iterator[Graph]:
    """Yield graphs from graph6 lines (str or raw bytes); blank lines and a bare header are skipped."""

    for number, line in enumerate(lines, start=1):
        if isinstance(line, bytes):
            try:
                line = line.decode("ascii")
            except UnicodeDecodeError as exc:
                raise Graph6FormatError(
                    f"non-ASCII byte 0x{line[exc.start]:02x}",
                    position=exc.start,
                    line_number=number,
                ) from exc
        text = line.strip()
        if not text or text == HEADER:
            continue
        yield parse_graph6(text, line_number=number)


def load_graphs(path: str | Path) -> List[Graph]:
    """Load every graph stored at ``path``.

    Edge-list files hold a single graph; anything else is read as graph6.
    """

    path = Path(path)
    if path.suffix.lower() in EDGE_LIST_SUFFIXES:
        return [parse_edge_list(path.read_text(encoding="utf-8"))]
    with path.open("rb") as handle:
        graphs = list(iter_graph6_lines(handle))
    logger.debug(f"Loaded {len(graphs)} graphs from {path}")
    return graphs


def resolve_graph_argument(text: str) -> List[Graph]:
    """Interpret a CLI argument as a file path, falling back to an inline graph6 record."""

    candidate = Path(text)
    if candidate.exists():
        return load_graphs(candidate)
    try:
        return [parse_graph6(text)]
    except Graph6FormatError as exc:
        raise Graph6FormatError(
            f"{text!r} is neither a readable file nor a graph6 record: {exc}",
            position=exc.position,
        ) from exc


def save_graphs(graphs: List[Graph], path: str | Path) -> None:
    Path(path).write_text("".join(write_graph6(g) + "\n" for g in graphs), encoding="ascii")


def fixtures_dir() -> Optional[Path]:
    """Directory of optional external fixtures, set through ``LOOPY_WL_FIXTURES``."""

    value = os.getenv("LOOPY_WL_FIXTURES")
    if not value:
        return None
    path = Path(value)
    return path if path.is_dir() else None


def load_fixture(name: str) -> Optional[List[Graph]]:
    """Load ``<fixtures>/<name>`` if it has been supplied, else ``None``."""

    directory = fixtures_dir()
    if directory is None or not (directory / name).exists():
        return None
    return load_graphs(directory / name)

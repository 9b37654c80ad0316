"""graph6 codec with positional error reporting.

Records are validated here (character range, size prefix, record length,
zero padding) and then decoded/encoded by networkx.
"""

from __future__ import annotations

import logging
from typing import Optional, Tuple

import networkx as nx

from loopy_wl.domain.graphs import Graph

logger = logging.getLogger(__name__)

HEADER = ">>graph6<<"
_MIN_CHAR = 63
_MAX_CHAR = 126


class Graph6FormatError(ValueError):
    """Raised for malformed graph6 records; carries the offending position."""

    def __init__(self, message: str, *, position: int, line_number: Optional[int] = None):
        self.position = position
        self.line_number = line_number
        where = f"position {position}"
        if line_number is not None:
            where = f"line {line_number}, {where}"
        super().__init__(f"{message} ({where})")


def _strip_record(line: str) -> str:
    record = line.strip()
    if record.startswith(HEADER):
        record = record[len(HEADER):]
    return record


def _decode_size(values: list[int]) -> Tuple[int, int]:
    """Return (n, header length) from character values already shifted by 63."""

    if not values:
        raise Graph6FormatError("empty graph6 record", position=0)
    if values[0] != 63:
        return values[0], 1
    if len(values) < 4:
        raise Graph6FormatError("truncated extended size prefix", position=len(values))
    if values[1] != 63:
        n = (values[1] << 12) | (values[2] << 6) | values[3]
        return n, 4
    if len(values) < 8:
        raise Graph6FormatError("truncated 8-byte size prefix", position=len(values))
    n = 0
    for value in values[2:8]:
        n = (n << 6) | value
    return n, 8


def validate_graph6(record: str) -> int:
    """Check a stripped record and return its vertex count."""

    for position, char in enumerate(record):
        code = ord(char)
        if not _MIN_CHAR <= code <= _MAX_CHAR:
            raise Graph6FormatError(f"character {char!r} outside 63..126", position=position)

    values = [ord(char) - _MIN_CHAR for char in record]
    n, header = _decode_size(values)
    bits = n * (n - 1) // 2
    expected = (bits + 5) // 6
    body = len(values) - header
    if body != expected:
        position = header + min(body, expected)
        raise Graph6FormatError(
            f"record for n={n} needs {expected} data characters, found {body}",
            position=position,
        )
    padding = expected * 6 - bits
    if expected and padding and values[-1] & ((1 << padding) - 1):
        raise Graph6FormatError("nonzero padding bits", position=len(values) - 1)
    return n


def parse_graph6(line: str, *, line_number: Optional[int] = None) -> Graph:
    """Decode one graph6 record (an optional ``>>graph6<<`` header is ignored)."""

    record = _strip_record(line)
    try:
        n = validate_graph6(record)
    except Graph6FormatError as exc:
        if line_number is None:
            raise
        raise Graph6FormatError(
            str(exc).rsplit(" (", 1)[0], position=exc.position, line_number=line_number
        ) from exc

    graph = nx.from_graph6_bytes(record.encode("ascii"))
    if graph.number_of_nodes() != n:  # pragma: no cover - networkx contract
        raise Graph6FormatError("decoded vertex count mismatch", position=0, line_number=line_number)
    return Graph.from_networkx(graph)


def write_graph6(g: Graph) -> str:
    """Encode ``g`` as a graph6 record without header or newline."""

    return nx.to_graph6_bytes(g.to_networkx(), header=False).decode("ascii").strip()

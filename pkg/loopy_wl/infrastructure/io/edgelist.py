"""Plain edge-list format for hand-authored fixtures.

The first data line is ``n m``; then ``m`` lines ``u v`` with 0-indexed
vertices. ``#`` starts a comment; blank lines are ignored.
"""

from __future__ import annotations

from typing import Iterable, List, Optional, Tuple

from loopy_wl.domain.graphs import Graph, GraphError


class EdgeListFormatError(ValueError):
    """Raised for malformed edge-list text."""

    def __init__(self, message: str, *, line_number: Optional[int] = None):
        self.line_number = line_number
        prefix = f"line {line_number}: " if line_number is not None else ""
        super().__init__(f"{prefix}{message}")


def _data_lines(lines: Iterable[str]) -> List[Tuple[int, List[str]]]:
    rows = []
    for number, raw in enumerate(lines, start=1):
        text = raw.split("#", 1)[0].strip()
        if text:
            rows.append((number, text.split()))
    return rows


def _ints(tokens: List[str], line_number: int) -> Tuple[int, int]:
    if len(tokens) != 2:
        raise EdgeListFormatError(f"expected two integers, got {len(tokens)} fields", line_number=line_number)
    try:
        return int(tokens[0]), int(tokens[1])
    except ValueError as exc:
        raise EdgeListFormatError(f"non-integer field in {' '.join(tokens)!r}", line_number=line_number) from exc


def parse_edge_list(text: str) -> Graph:
    rows = _data_lines(text.splitlines())
    if not rows:
        raise EdgeListFormatError("missing 'n m' header")

    header_line, header = rows[0]
    n, m = _ints(header, header_line)
    if n < 0 or m < 0:
        raise EdgeListFormatError("n and m must be non-negative", line_number=header_line)
    body = rows[1:]
    if len(body) != m:
        last = body[-1][0] if body else header_line
        raise EdgeListFormatError(f"header declares {m} edges, found {len(body)}", line_number=last)

    edges = []
    seen = set()
    for number, tokens in body:
        u, v = _ints(tokens, number)
        if not (0 <= u < n and 0 <= v < n):
            raise EdgeListFormatError(f"edge {u} {v} out of range for n={n}", line_number=number)
        if u == v:
            raise EdgeListFormatError(f"self-loop at {u}", line_number=number)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise EdgeListFormatError(f"duplicate edge {u} {v}", line_number=number)
        seen.add(key)
        edges.append(key)
    try:
        return Graph.from_edges(n, edges)
    except GraphError as exc:  # pragma: no cover - guarded above
        raise EdgeListFormatError(str(exc)) from exc


def write_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"

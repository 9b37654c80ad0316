"""Graph codecs and dataset loading."""

from .datasets import fixtures_dir, iter_graph6_lines, load_fixture, load_graphs, resolve_graph_argument, save_graphs
from .edgelist import EdgeListFormatError, parse_edge_list, write_edge_list
from .graph6 import Graph6FormatError, parse_graph6, validate_graph6, write_graph6

__all__ = [
    "EdgeListFormatError",
    "Graph6FormatError",
    "fixtures_dir",
    "iter_graph6_lines",
    "load_fixture",
    "load_graphs",
    "parse_edge_list",
    "parse_graph6",
    "resolve_graph_argument",
    "save_graphs",
    "validate_graph6",
    "write_edge_list",
    "write_graph6",
]

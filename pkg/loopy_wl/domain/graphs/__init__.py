"""Graph representation and structural operations."""

from .base import (
    Edge,
    Graph,
    GraphError,
    PermutationSizeError,
    VertexOutOfRangeError,
    VertexPermutation,
)
from .operations import (
    biconnected_components,
    block_vertices,
    connected_components,
    disjoint_union,
    induced_subgraph,
    is_connected,
    permute,
)

__all__ = [
    "Edge",
    "Graph",
    "GraphError",
    "PermutationSizeError",
    "VertexOutOfRangeError",
    "VertexPermutation",
    "biconnected_components",
    "block_vertices",
    "connected_components",
    "disjoint_union",
    "induced_subgraph",
    "is_connected",
    "permute",
]

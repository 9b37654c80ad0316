"""Cactus recognition and canonical tree decompositions."""

from .decomposition import (
    CYCLE,
    NODE,
    TREE_EDGE,
    TreeDecomposition,
    canonical_tree_decomposition,
    rooted_cactus_code,
    td_canonical_code,
    td_depth,
    validate_tree_decomposition,
)
from .recognition import (
    DisconnectedGraphError,
    FanBlock,
    NotACactusError,
    fan_blocks,
    is_cactus,
    is_fan_cactus,
    is_outerplanar,
    is_r_cactus,
)

__all__ = [
    "CYCLE",
    "NODE",
    "TREE_EDGE",
    "DisconnectedGraphError",
    "FanBlock",
    "NotACactusError",
    "TreeDecomposition",
    "canonical_tree_decomposition",
    "fan_blocks",
    "is_cactus",
    "is_fan_cactus",
    "is_outerplanar",
    "is_r_cactus",
    "rooted_cactus_code",
    "td_canonical_code",
    "td_depth",
    "validate_tree_decomposition",
]

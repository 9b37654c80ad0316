"""Exact ground-truth oracles."""

from .counting import (
    OracleBudgetExceededError,
    automorphism_count,
    cycle_pattern,
    hom_count,
    hom_profile,
    rooted_sub_cycle,
    sub_count,
)
from .isomorphism import is_forest, is_iso_bruteforce
from .spasm import is_subgraph_gnn_countable, quotient, spasm

__all__ = [
    "OracleBudgetExceededError",
    "automorphism_count",
    "cycle_pattern",
    "hom_count",
    "hom_profile",
    "is_forest",
    "is_iso_bruteforce",
    "is_subgraph_gnn_countable",
    "quotient",
    "rooted_sub_cycle",
    "spasm",
    "sub_count",
]

"""Path neighbourhoods N_q(v)."""

from .neighborhoods import (
    NeighborhoodMismatchError,
    OrientedPath,
    PathBudgetExceededError,
    PathNeighborhood,
    count_cycles_through,
    enumerate_neighborhood,
    neighborhood_statistics,
    precompute_all,
)

__all__ = [
    "NeighborhoodMismatchError",
    "OrientedPath",
    "PathBudgetExceededError",
    "PathNeighborhood",
    "count_cycles_through",
    "enumerate_neighborhood",
    "neighborhood_statistics",
    "precompute_all",
]

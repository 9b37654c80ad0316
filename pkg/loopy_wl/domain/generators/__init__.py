"""Graph-family generators."""

from .base import (
    FamilyId,
    FamilyInfo,
    FamilyNotSupportedError,
    GeneratorFactory,
    InvalidGeneratorParameterError,
    register_family,
)
from .families import (
    cfi_vertex_count,
    gen_cfi,
    gen_chordal_pair,
    gen_complete,
    gen_csl,
    gen_cycle,
    gen_fan_cactus,
    gen_path,
    gen_random_cactus,
    gen_random_graph,
    gen_random_sparse,
    gen_rook44,
    gen_shrikhande,
    gen_star,
    gen_two_triangles_bridge,
)
from .registry import default_generator_factory, register_default_families

__all__ = [
    "FamilyId",
    "FamilyInfo",
    "FamilyNotSupportedError",
    "GeneratorFactory",
    "InvalidGeneratorParameterError",
    "cfi_vertex_count",
    "default_generator_factory",
    "gen_cfi",
    "gen_chordal_pair",
    "gen_complete",
    "gen_csl",
    "gen_cycle",
    "gen_fan_cactus",
    "gen_path",
    "gen_random_cactus",
    "gen_random_graph",
    "gen_random_sparse",
    "gen_rook44",
    "gen_shrikhande",
    "gen_star",
    "gen_two_triangles_bridge",
    "register_default_families",
    "register_family",
]

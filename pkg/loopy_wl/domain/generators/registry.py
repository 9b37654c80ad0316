"""Default family registrations."""

from __future__ import annotations

from typing import Any, List, Mapping

from ..graphs import Graph
from .base import FamilyId, GeneratorFactory, InvalidGeneratorParameterError, register_family
from .families import (
    gen_chordal_pair,
    gen_cfi,
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


def _int(params: Mapping[str, Any], key: str) -> int:
    try:
        return int(params[key])
    except (TypeError, ValueError) as exc:
        raise InvalidGeneratorParameterError(f"{key} must be an integer, got {params[key]!r}") from exc


def _float(params: Mapping[str, Any], key: str) -> float:
    try:
        return float(params[key])
    except (TypeError, ValueError) as exc:
        raise InvalidGeneratorParameterError(f"{key} must be a number, got {params[key]!r}") from exc


_TRUE = {"1", "true", "yes", "on"}
_FALSE = {"0", "false", "no", "off"}


def _bool(params: Mapping[str, Any], key: str) -> bool:
    value = params.get(key, False)
    if isinstance(value, bool):
        return value
    text = str(value).strip().lower()
    if text in _TRUE:
        return True
    if text in _FALSE:
        return False
    raise InvalidGeneratorParameterError(f"{key} must be true or false, got {value!r}")


def register_default_families(factory: GeneratorFactory) -> GeneratorFactory:
    @register_family(factory, FamilyId.CYCLE, parameters=("n",))
    def _cycle(params) -> List[Graph]:
        return [gen_cycle(_int(params, "n"))]

    @register_family(factory, FamilyId.PATH, parameters=("n",))
    def _path(params) -> List[Graph]:
        return [gen_path(_int(params, "n"))]

    @register_family(factory, FamilyId.COMPLETE, parameters=("n",))
    def _complete(params) -> List[Graph]:
        return [gen_complete(_int(params, "n"))]

    @register_family(factory, FamilyId.STAR, parameters=("leaves",))
    def _star(params) -> List[Graph]:
        return [gen_star(_int(params, "leaves"))]

    @register_family(
        factory,
        FamilyId.CHORDAL_PAIR,
        parameters=("r",),
        description="Pair separated by loopy(r+1) but not by loopy(r)",
    )
    def _chordal(params) -> List[Graph]:
        return list(gen_chordal_pair(_int(params, "r")))

    @register_family(factory, FamilyId.CSL, parameters=("n", "s"), defaults={"n": 41})
    def _csl(params) -> List[Graph]:
        return [gen_csl(_int(params, "n"), _int(params, "s"))]

    @register_family(factory, FamilyId.SHRIKHANDE)
    def _shrikhande(params) -> List[Graph]:
        return [gen_shrikhande()]

    @register_family(factory, FamilyId.ROOK)
    def _rook(params) -> List[Graph]:
        return [gen_rook44()]

    @register_family(factory, FamilyId.SR16622, description="Shrikhande and 4x4 rook graph")
    def _sr16622(params) -> List[Graph]:
        return [gen_shrikhande(), gen_rook44()]

    @register_family(
        factory,
        FamilyId.CFI,
        defaults={"twisted": False},
        description="Fürer graph over a base graph (default: two triangles joined by a bridge)",
    )
    def _cfi(params) -> List[Graph]:
        base = params.get("base") or gen_two_triangles_bridge()
        if _bool(params, "pair"):
            return [gen_cfi(base, False), gen_cfi(base, True)]
        return [gen_cfi(base, _bool(params, "twisted"))]

    @register_family(factory, FamilyId.TWO_TRIANGLES_BRIDGE)
    def _two_triangles(params) -> List[Graph]:
        return [gen_two_triangles_bridge()]

    @register_family(
        factory,
        FamilyId.RANDOM_CACTUS,
        parameters=("n_target", "max_cycle_len", "seed"),
        defaults={"seed": 0},
    )
    def _random_cactus(params) -> List[Graph]:
        return [gen_random_cactus(_int(params, "n_target"), _int(params, "max_cycle_len"), _int(params, "seed"))]

    @register_family(
        factory,
        FamilyId.FAN_CACTUS,
        parameters=("n_target", "max_cycle_len", "chord_prob", "seed"),
        defaults={"seed": 0, "chord_prob": 0.5},
    )
    def _fan_cactus(params) -> List[Graph]:
        graph, _root = gen_fan_cactus(
            _int(params, "n_target"),
            _int(params, "max_cycle_len"),
            _float(params, "chord_prob"),
            _int(params, "seed"),
        )
        return [graph]

    @register_family(factory, FamilyId.RANDOM, parameters=("n", "p", "seed"), defaults={"seed": 0})
    def _random(params) -> List[Graph]:
        return [gen_random_graph(_int(params, "n"), _float(params, "p"), _int(params, "seed"))]

    @register_family(
        factory,
        FamilyId.SPARSE,
        parameters=("n", "avg_degree", "seed"),
        defaults={"n": 23, "avg_degree": 2.2, "seed": 0},
    )
    def _sparse(params) -> List[Graph]:
        return [gen_random_sparse(_int(params, "n"), _float(params, "avg_degree"), _int(params, "seed"))]

    return factory


def default_generator_factory() -> GeneratorFactory:
    return register_default_families(GeneratorFactory())

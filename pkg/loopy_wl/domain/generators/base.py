"""Registry of graph families reachable from the ``gen`` command."""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Iterable, List, Mapping, Tuple

from ..graphs import Graph


class FamilyId(str, Enum):
    """Canonical identifiers for the generator families."""

    CYCLE = "cycle"
    PATH = "path"
    COMPLETE = "complete"
    STAR = "star"
    CHORDAL_PAIR = "chordal-pair"
    CSL = "csl"
    SHRIKHANDE = "shrikhande"
    ROOK = "rook"
    SR16622 = "sr16622"
    CFI = "cfi"
    TWO_TRIANGLES_BRIDGE = "two-triangles-bridge"
    RANDOM_CACTUS = "random-cactus"
    FAN_CACTUS = "fan-cactus"
    RANDOM = "random"
    SPARSE = "sparse"


class InvalidGeneratorParameterError(ValueError):
    """Raised when generator parameters are outside their valid range."""


class FamilyNotSupportedError(LookupError):
    """Raised when no generator is registered for a family."""


GraphProvider = Callable[[Mapping[str, Any]], List[Graph]]


@dataclass
class FamilyInfo:
    """Metadata describing a registered family."""

    family_id: FamilyId
    name: str
    parameters: Tuple[str, ...] = ()
    description: str | None = None
    defaults: Dict[str, Any] = field(default_factory=dict)


class GeneratorFactory:
    """Registry-backed factory resolving families to graph providers."""

    def __init__(self) -> None:
        self._registry: Dict[FamilyId, GraphProvider] = {}
        self._descriptions: Dict[FamilyId, FamilyInfo] = {}

    def register(
        self,
        family_id: FamilyId,
        provider: GraphProvider,
        *,
        parameters: Tuple[str, ...] = (),
        defaults: Mapping[str, Any] | None = None,
        name: str | None = None,
        description: str | None = None,
        override: bool = False,
    ) -> None:
        if not override and family_id in self._registry:
            raise ValueError(f"Family {family_id} already registered")
        self._registry[family_id] = provider
        self._descriptions[family_id] = FamilyInfo(
            family_id=family_id,
            name=name or family_id.value,
            parameters=parameters,
            description=description,
            defaults=dict(defaults or {}),
        )

    def info(self, family_id: FamilyId) -> FamilyInfo:
        try:
            return self._descriptions[family_id]
        except KeyError as exc:
            raise FamilyNotSupportedError(family_id) from exc

    def generate(self, family: FamilyId | str, params: Mapping[str, Any] | None = None) -> List[Graph]:
        """Build the graphs of a family; missing parameters fall back to registered defaults."""

        try:
            family_id = FamilyId(family)
        except ValueError as exc:
            raise FamilyNotSupportedError(family) from exc
        info = self.info(family_id)
        values = dict(info.defaults)
        values.update({key: value for key, value in (params or {}).items() if value is not None})
        missing = [name for name in info.parameters if name not in values]
        if missing:
            raise InvalidGeneratorParameterError(
                f"{family_id.value} needs parameters: {', '.join(missing)}"
            )
        return self._registry[family_id](values)

    def available_families(self) -> Iterable[FamilyInfo]:
        return self._descriptions.values()


def register_family(
    factory: GeneratorFactory,
    family_id: FamilyId,
    *,
    parameters: Tuple[str, ...] = (),
    defaults: Mapping[str, Any] | None = None,
    description: str | None = None,
) -> Callable[[GraphProvider], GraphProvider]:
    """Decorator that registers a provider with the factory."""

    def decorator(provider: GraphProvider) -> GraphProvider:
        factory.register(
            family_id,
            provider,
            parameters=parameters,
            defaults=defaults,
            description=description,
        )
        return provider

    return decorator

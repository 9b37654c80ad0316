"""Factory responsible for resolving refinement engines by method."""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass
from typing import Dict, Iterable, Optional

from ...shared.config import BudgetConfig
from .base import MethodId, MethodNotSupportedError, MethodSpec, RefinementEngine
from .engines import ColorRefinement, LoopyRefinement, TupleRefinement

EngineProvider = Callable[[MethodSpec, BudgetConfig], RefinementEngine]


@dataclass
class MethodInfo:
    """Metadata describing an available method in the factory."""

    method_id: MethodId
    name: str
    description: str | None = None


class RefinementFactory:
    """Registry-backed factory that builds engines on demand."""

    def __init__(self, budget: Optional[BudgetConfig] = None) -> None:
        self._registry: Dict[MethodId, EngineProvider] = {}
        self._descriptions: Dict[MethodId, MethodInfo] = {}
        self.budget = budget or BudgetConfig()

    def register(
        self,
        method_id: MethodId,
        provider: EngineProvider,
        *,
        name: str | None = None,
        description: str | None = None,
        override: bool = False,
    ) -> None:
        if not override and method_id in self._registry:
            raise ValueError(f"Method {method_id} already registered")

        self._registry[method_id] = provider
        self._descriptions[method_id] = MethodInfo(
            method_id=method_id,
            name=name or method_id.value,
            description=description,
        )

    def resolve(self, spec: MethodSpec) -> RefinementEngine:
        try:
            provider = self._registry[spec.method]
        except KeyError as exc:
            raise MethodNotSupportedError(spec.method) from exc
        if spec.method is MethodId.LOOPY and spec.r > self.budget.r_max:
            raise MethodNotSupportedError(f"r={spec.r} exceeds r_max={self.budget.r_max}")
        return provider(spec, self.budget)

    def available_methods(self) -> Iterable[MethodInfo]:
        return self._descriptions.values()


def register_engine(
    factory: RefinementFactory,
    method_id: MethodId,
    *,
    name: str | None = None,
    description: str | None = None,
) -> Callable[[EngineProvider], EngineProvider]:
    """Decorator that registers an engine provider with the factory."""

    def decorator(provider: EngineProvider) -> EngineProvider:
        factory.register(method_id, provider, name=name, description=description)
        return provider

    return decorator


def register_default_engines(factory: RefinementFactory) -> RefinementFactory:
    @register_engine(factory, MethodId.WL1, name="1-WL", description="Classic colour refinement")
    def _wl1(spec: MethodSpec, budget: BudgetConfig) -> RefinementEngine:
        return ColorRefinement(spec)

    @register_engine(
        factory,
        MethodId.LOOPY,
        name="r-loopy WL",
        description="Colour refinement over simple paths between neighbours",
    )
    def _loopy(spec: MethodSpec, budget: BudgetConfig) -> RefinementEngine:
        return LoopyRefinement(spec, path_budget=budget.path_budget)

    @register_engine(factory, MethodId.KWL, name="k-WL", description="Refinement over k-tuples")
    def _kwl(spec: MethodSpec, budget: BudgetConfig) -> RefinementEngine:
        return TupleRefinement(spec, tuple_limit=budget.kwl_tuple_limit)

    return factory


def default_factory(budget: Optional[BudgetConfig] = None) -> RefinementFactory:
    return register_default_engines(RefinementFactory(budget))

"""Validation engine responsible for enforcing structural rules."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional, Protocol

from ...shared.dto import ValidationIssue, ValidationSeverity


class RuleSetId(str, Enum):
    """Subjects the engine knows how to check."""

    TREE_DECOMPOSITION = "tree_decomposition"
    CONFIG = "config"


class UnknownRuleSetError(LookupError):
    """Raised when no rule set is registered for a subject."""


class RuleEvaluator(Protocol):
    """Callable signature used to evaluate a validation rule."""

    def __call__(self, subject: Any) -> tuple[bool, Dict[str, float | str]]:  # pragma: no cover - structural
        ...


@dataclass(slots=True)
class ValidationRule:
    """Representation of a single validation rule."""

    code: str
    message: str
    severity: ValidationSeverity
    evaluator: RuleEvaluator


@dataclass(slots=True)
class RuleSet:
    """Group of rules associated with a subject and version."""

    ruleset_id: RuleSetId
    version: str
    rules: Iterable[ValidationRule] = field(default_factory=list)
    metadata: Dict[str, str] = field(default_factory=dict)


class ValidationEngine:
    """Central coordinator that evaluates rules over a subject."""

    def __init__(self) -> None:
        self._rulesets: Dict[RuleSetId, RuleSet] = {}

    def register_ruleset(self, rule_set: RuleSet, *, override: bool = False) -> None:
        if not override and rule_set.ruleset_id in self._rulesets:
            raise ValueError(f"Ruleset for {rule_set.ruleset_id} already registered")

        self._rulesets[rule_set.ruleset_id] = rule_set

    def check(
        self,
        subject: Any,
        ruleset_id: RuleSetId,
        ruleset_override: Optional[RuleSet] = None,
    ) -> List[ValidationIssue]:
        """Evaluate every rule in order and collect the failures."""

        rule_set = ruleset_override or self.get_ruleset(ruleset_id)
        issues: List[ValidationIssue] = []
        for rule in rule_set.rules:
            passed, details = rule.evaluator(subject)
            if passed:
                continue
            issues.append(
                ValidationIssue(
                    code=rule.code,
                    message=rule.message,
                    severity=rule.severity,
                    details=details,
                )
            )
        return issues

    def get_ruleset(self, ruleset_id: RuleSetId) -> RuleSet:
        try:
            return self._rulesets[ruleset_id]
        except KeyError as exc:
            raise UnknownRuleSetError(f"No ruleset registered for {ruleset_id}") from exc


def blocking(issues: Iterable[ValidationIssue]) -> List[ValidationIssue]:
    return [issue for issue in issues if issue.severity == ValidationSeverity.ERROR]

"""Validation rules and engines for decompositions and configuration."""

from .engine import RuleSet, RuleSetId, UnknownRuleSetError, ValidationEngine, ValidationRule, blocking
from .rulesets import DecompositionSubject, default_engine, register_default_rules

__all__ = [
	"DecompositionSubject",
	"RuleSet",
	"RuleSetId",
	"UnknownRuleSetError",
	"ValidationEngine",
	"ValidationRule",
	"blocking",
	"default_engine",
	"register_default_rules",
]

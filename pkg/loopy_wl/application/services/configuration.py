"""Configuration loading with rule-based validation."""

from __future__ import annotations

import logging
from dataclasses import replace
from typing import Any, List, Mapping, Optional

from loopy_wl.domain.validation import RuleSetId, ValidationEngine, blocking, default_engine
from loopy_wl.shared.config import AppConfig, ConfigurationError
from loopy_wl.shared.dto import ValidationIssue, ValidationSeverity

logger = logging.getLogger(__name__)


def apply_overrides(config: AppConfig, overrides: Mapping[str, Any]) -> AppConfig:
    """Return a copy with ``section.field`` keys replaced; ``None`` values are ignored."""

    sections = {"refinement": config.refinement, "budget": config.budget, "runtime": config.runtime}
    changes: dict = {name: {} for name in sections}
    for key, value in overrides.items():
        if value is None:
            continue
        section, _, name = key.partition(".")
        if section not in sections or not hasattr(sections[section], name):
            raise KeyError(f"Unknown configuration key {key!r}")
        changes[section][name] = value
    return replace(
        config,
        **{name: replace(sections[name], **values) for name, values in changes.items() if values},
    )


def validate_config(config: AppConfig, engine: Optional[ValidationEngine] = None) -> List[ValidationIssue]:
    """Run the configuration rules; blocking issues raise ``ConfigurationError``."""

    engine = engine or default_engine()
    issues = engine.check(config, RuleSetId.CONFIG)
    for issue in issues:
        if issue.severity == ValidationSeverity.WARNING:
            logger.warning(f"{issue.code}: {issue.message}")
    errors = blocking(issues)
    if errors:
        raise ConfigurationError(errors)
    return issues


def load_config(env_file: Optional[str] = None, overrides: Optional[Mapping[str, Any]] = None) -> AppConfig:
    config = AppConfig.from_env(env_file)
    if overrides:
        config = apply_overrides(config, overrides)
    validate_config(config)
    return config

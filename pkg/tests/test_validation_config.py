from __future__ import annotations

import logging

import pytest

from loopy_wl.application.services import apply_overrides, load_config, validate_config
from loopy_wl.domain.validation import (
    RuleSet,
    RuleSetId,
    UnknownRuleSetError,
    ValidationEngine,
    ValidationRule,
    default_engine,
)
from loopy_wl.shared.config import AppConfig, ConfigurationError
from loopy_wl.shared.dto import ValidationSeverity


def test_defaults_from_empty_environment(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    config = AppConfig.from_env()
    assert config.refinement.r == 1
    assert config.refinement.k == 3
    assert config.budget.path_budget == 5_000_000
    assert config.runtime.threads == 1
    assert config.runtime.log_level == "INFO"


def test_environment_variables_override_defaults(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    monkeypatch.setenv("LOOPY_WL_R", "3")
    monkeypatch.setenv("LOOPY_WL_ATP", "yes")
    monkeypatch.setenv("LOOPY_WL_PATH_BUDGET", "1000")
    monkeypatch.setenv("LOOPY_WL_THREADS", "4")
    monkeypatch.setenv("DEBUG", "1")
    config = AppConfig.from_env()
    assert config.refinement.r == 3
    assert config.refinement.atp is True
    assert config.budget.path_budget == 1000
    assert config.runtime.threads == 4
    assert config.runtime.log_level == "DEBUG"


def test_env_file_is_read(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    for key in ("LOOPY_WL_R", "LOOPY_WL_OUTPUT_FORMAT"):
        monkeypatch.delenv(key, raising=False)
    env_file = tmp_path / "custom.env"
    env_file.write_text("LOOPY_WL_R=2\nLOOPY_WL_OUTPUT_FORMAT=csv\n", encoding="utf-8")
    config = AppConfig.from_env(str(env_file))
    assert config.refinement.r == 2
    assert config.runtime.output_format == "csv"


def test_apply_overrides_replaces_nested_fields():
    config = apply_overrides(AppConfig(), {"refinement.r": 4, "runtime.threads": 2, "budget.r_max": None})
    assert config.refinement.r == 4
    assert config.runtime.threads == 2
    assert config.budget.r_max == 8
    with pytest.raises(KeyError):
        apply_overrides(AppConfig(), {"refinement.depth": 1})
    with pytest.raises(KeyError):
        apply_overrides(AppConfig(), {"paths.r": 1})


@pytest.mark.parametrize(
    "overrides, code",
    [
        ({"refinement.r": 9}, "config_r_range"),
        ({"refinement.r": -1}, "config_r_range"),
        ({"refinement.k": 1}, "config_k_min"),
        ({"refinement.max_iters": -2}, "config_max_iters"),
        ({"refinement.kwl_variant": "folklore"}, "config_kwl_variant"),
        ({"runtime.threads": 0}, "config_threads"),
        ({"runtime.output_format": "xml"}, "config_output_format"),
        ({"budget.path_budget": 0}, "config_budgets_positive"),
    ],
)
def test_invalid_configuration_is_rejected(overrides, code):
    with pytest.raises(ConfigurationError) as info:
        validate_config(apply_overrides(AppConfig(), overrides))
    assert code in [issue.code for issue in info.value.issues]
    assert code in str(info.value)


def test_large_k_only_warns(caplog):
    config = apply_overrides(AppConfig(), {"refinement.k": 4})
    with caplog.at_level(logging.WARNING):
        issues = validate_config(config)
    assert [issue.code for issue in issues] == ["config_k_large"]
    assert issues[0].severity == ValidationSeverity.WARNING
    assert "config_k_large" in caplog.text


def test_load_config_applies_overrides(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    config = load_config(overrides={"refinement.r": 2})
    assert config.refinement.r == 2
    with pytest.raises(ConfigurationError):
        load_config(overrides={"runtime.threads": 0})


def test_engine_rejects_duplicate_and_unknown_rulesets():
    engine = default_engine()
    with pytest.raises(ValueError):
        engine.register_ruleset(RuleSet(ruleset_id=RuleSetId.CONFIG, version="2.0"))
    with pytest.raises(UnknownRuleSetError):
        ValidationEngine().get_ruleset(RuleSetId.CONFIG)


def test_ruleset_override_is_used_for_one_check():
    always_fails = ValidationRule(
        code="never",
        message="always fails",
        severity=ValidationSeverity.ERROR,
        evaluator=lambda subject: (False, {"subject": str(subject)}),
    )
    engine = default_engine()
    override = RuleSet(ruleset_id=RuleSetId.CONFIG, version="test", rules=[always_fails])
    issues = engine.check(AppConfig(), RuleSetId.CONFIG, ruleset_override=override)
    assert [issue.code for issue in issues] == ["never"]
    assert engine.check(AppConfig(), RuleSetId.CONFIG) == []

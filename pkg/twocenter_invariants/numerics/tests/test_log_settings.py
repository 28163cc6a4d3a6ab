"""
Unit tests for log level selection.
"""

import logging

import pytest
from rich.logging import RichHandler

from twocenter_invariants.numerics import log_settings


@pytest.fixture(autouse=True)
def reset_log_level(monkeypatch: pytest.MonkeyPatch) -> None:
    log_settings.set_log_level(None)
    monkeypatch.delenv("TWOCENTER_LOG", raising=False)
    yield
    log_settings.set_log_level(None)
    monkeypatch.delenv("TWOCENTER_LOG", raising=False)


def test_default_level_is_warning() -> None:
    assert log_settings.get_log_level() == "WARNING"


def test_env_var_controls_level(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv("TWOCENTER_LOG", "debug")
    assert log_settings.get_log_level() == "DEBUG"


def test_prefer_overrides_env(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv("TWOCENTER_LOG", "DEBUG")
    assert log_settings.get_log_level(prefer="error") == "ERROR"


def test_set_log_level_overrides_and_clears(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv("TWOCENTER_LOG", "INFO")
    log_settings.set_log_level("CRITICAL")
    assert log_settings.get_log_level() == "CRITICAL"
    log_settings.set_log_level(None)
    assert log_settings.get_log_level() == "INFO"


def test_empty_env_var_treated_as_unset(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv("TWOCENTER_LOG", "")
    assert log_settings.get_log_level() == "WARNING"


def test_invalid_env_raises_value_error(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv("TWOCENTER_LOG", "loud")
    with pytest.raises(ValueError, match="Invalid log level"):
        log_settings.get_log_level()


def test_invalid_override_raises_value_error() -> None:
    with pytest.raises(ValueError, match="DEBUG, INFO, WARNING, ERROR, CRITICAL"):
        log_settings.set_log_level("verbose")


def test_configure_logging_installs_one_handler() -> None:
    logger = log_settings.configure_logging("INFO")
    try:
        log_settings.configure_logging("DEBUG")
        handlers = [h for h in logger.handlers if isinstance(h, RichHandler)]
        assert len(handlers) == 1
        assert logger.level == logging.DEBUG
        assert logger.name == "twocenter_invariants"
    finally:
        for handler in list(logger.handlers):
            logger.removeHandler(handler)
        logger.propagate = True
        logger.setLevel(logging.NOTSET)

"""
Log level selection for the twocenter_invariants package.

Library modules only call logging.getLogger(__name__); the CLI calls
configure_logging() once to attach a rich handler.
"""

from __future__ import annotations

import logging
import os
from typing import Final

from rich.console import Console
from rich.logging import RichHandler

_VALID_LEVELS: Final[tuple[str, ...]] = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")
_DEFAULT_LEVEL: Final[str] = "WARNING"
_ENV_VAR_NAME: Final[str] = "TWOCENTER_LOG"
_PACKAGE_LOGGER: Final[str] = "twocenter_invariants"

_level_override: str | None = None


def _format_valid_options() -> str:
    return ", ".join(_VALID_LEVELS)


def _normalize_level(value: str | None) -> str | None:
    if value is None:
        return None

    if not isinstance(value, str):
        raise ValueError(
            f"Invalid log level: {value!r}. Valid options: {_format_valid_options()}"
        )

    if value == "":
        return None

    normalized = value.strip().upper()
    if normalized not in _VALID_LEVELS:
        raise ValueError(
            f"Invalid log level: {value!r}. Valid options: {_format_valid_options()}"
        )

    return normalized


def get_log_level(prefer: str | None = None) -> str:
    """
    Resolve the log level in precedence order.

    Args:
        prefer: Optional explicitly requested level.

    Returns:
        Level name.

    Raises:
        ValueError: If a provided level is invalid.
    """
    preferred = _normalize_level(prefer)
    if preferred is not None:
        return preferred

    if _level_override is not None:
        return _level_override

    env_level = _normalize_level(os.getenv(_ENV_VAR_NAME))
    if env_level is not None:
        return env_level

    return _DEFAULT_LEVEL


def set_log_level(value: str | None) -> None:
    """
    Set in-memory level override (testing only).

    Args:
        value: Level to force, or None to clear the override.

    Raises:
        ValueError: If the value is invalid.
    """
    global _level_override
    _level_override = _normalize_level(value)


def configure_logging(prefer: str | None = None) -> logging.Logger:
    """Attach a single RichHandler to the package logger and set its level."""
    logger = logging.getLogger(_PACKAGE_LOGGER)
    logger.setLevel(get_log_level(prefer))
    if not any(isinstance(h, RichHandler) for h in logger.handlers):
        handler = RichHandler(
            console=Console(stderr=True), show_path=False, markup=False
        )
        handler.setFormatter(logging.Formatter("%(name)s: %(message)s"))
        logger.addHandler(handler)
    logger.propagate = False
    return logger

"""
Configuration for webvac

Settings are read from the environment each time they are needed so that tests
and the CLI can override them without touching module state.
"""

import logging
import os

logger = logging.getLogger(__name__)

BUDGET_ENV = "WEBVAC_BUDGET"
LOG_LEVEL_ENV = "WEBVAC_LOG_LEVEL"
API_HOST_ENV = "WEBVAC_API_HOST"
API_PORT_ENV = "WEBVAC_API_PORT"

DEFAULT_BUDGET = 20000
DEFAULT_LOG_LEVEL = "warning"
LOG_LEVELS = ("debug", "info", "warning", "error", "critical")


def get_enumeration_budget() -> int:
    """
    Get the maximum number of tableaux a shape may have to be enumerated.

    Returns:
        int: value of WEBVAC_BUDGET, or the default when unset or invalid
    """
    raw = os.environ.get(BUDGET_ENV)
    if raw is None:
        return DEFAULT_BUDGET

    try:
        budget = int(raw)
    except ValueError:
        logger.warning(f"Ignoring {BUDGET_ENV}={raw!r}: not an integer")
        return DEFAULT_BUDGET

    if budget <= 0:
        logger.warning(f"Ignoring {BUDGET_ENV}={raw!r}: must be positive")
        return DEFAULT_BUDGET
    return budget


def get_log_level() -> str:
    """
    Get the default log level for the command line.

    Returns:
        str: one of LOG_LEVELS
    """
    level = os.environ.get(LOG_LEVEL_ENV, DEFAULT_LOG_LEVEL).lower()
    if level not in LOG_LEVELS:
        logger.warning(f"Ignoring {LOG_LEVEL_ENV}={level!r}")
        return DEFAULT_LOG_LEVEL
    return level


def get_api_base_url() -> str:
    """Base URL used for the links served by the root endpoint."""
    host = os.environ.get(API_HOST_ENV, "localhost")
    port = os.environ.get(API_PORT_ENV, "8000")
    return f"http://{host}:{port}"

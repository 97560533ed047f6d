"""
Test module for environment configuration
"""

import logging
import os
from unittest.mock import patch

import pytest

from webvac.core.config import (
    BUDGET_ENV,
    DEFAULT_BUDGET,
    get_api_base_url,
    get_enumeration_budget,
    get_log_level,
)


@patch.dict(os.environ, {}, clear=True)
def test_defaults():
    """Test the values used when nothing is configured."""

    # Assertions
    assert get_enumeration_budget() == DEFAULT_BUDGET == 20000
    assert get_log_level() == "warning"
    assert get_api_base_url() == "http://localhost:8000"


@patch.dict(os.environ, {"WEBVAC_BUDGET": "500", "WEBVAC_LOG_LEVEL": "DEBUG"})
def test_environment_overrides():
    """Test that the environment overrides the defaults."""

    # Assertions
    assert get_enumeration_budget() == 500
    assert get_log_level() == "debug"


@pytest.mark.parametrize("raw", ["lots", "0", "-3"])
def test_invalid_budget_falls_back(raw, caplog):
    """Test that unusable budgets are ignored with a warning."""

    with patch.dict(os.environ, {BUDGET_ENV: raw}), caplog.at_level(logging.WARNING):
        budget = get_enumeration_budget()

    # Assertions
    assert budget == DEFAULT_BUDGET
    assert f"Ignoring {BUDGET_ENV}" in caplog.text


@patch.dict(os.environ, {"WEBVAC_LOG_LEVEL": "loud"})
def test_invalid_log_level_falls_back(caplog):
    """Test that an unknown log level is ignored."""

    # Assertions
    assert get_log_level() == "warning"
    assert "WEBVAC_LOG_LEVEL" in caplog.text


@patch.dict(os.environ, {"WEBVAC_API_HOST": "example.org", "WEBVAC_API_PORT": "9000"})
def test_api_base_url():
    """Test the base URL used by the root endpoint."""

    # Assertions
    assert get_api_base_url() == "http://example.org:9000"

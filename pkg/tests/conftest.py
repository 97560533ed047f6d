"""
Shared fixtures for the webvac tests

The tableaux here are the worked examples the pipeline is checked against:
a 5 x 2 tableau whose web has two dumbbells and six Y vertices, a 4 x 3
tableau whose evacuation needs both vertical edges flipped, and a 3 x 3
tableau with a single crossing.
"""

import pytest

from webvac.core.tableau import validate
from webvac.models.tableau import StandardTableau


@pytest.fixture
def intro_tableau() -> StandardTableau:
    return validate([[1, 2], [3, 4], [5, 7], [6, 8], [9, 10]])


@pytest.fixture
def evac_flip_tableau() -> StandardTableau:
    return validate([[1, 3, 5], [2, 4, 8], [6, 9, 10], [7, 11, 12]])


@pytest.fixture
def sl3_tableau() -> StandardTableau:
    return validate([[1, 2, 3], [4, 5, 8], [6, 7, 9]])


@pytest.fixture
def small_tableau() -> StandardTableau:
    return validate([[1, 3], [2, 4], [5, 6]])

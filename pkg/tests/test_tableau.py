"""
Test module for rectangular standard Young tableaux

Covers validation, jeu de taquin, promotion, both evacuation algorithms,
rotation and complement, and enumeration against the hook-length count.
"""

import os
from itertools import permutations
from unittest.mock import patch

import pytest

from webvac.core.errors import BudgetExceeded, InputError, NotBijective, NotIncreasing, NotRectangular
from webvac.core.tableau import (
    complement,
    count_syt,
    enumerate_syt,
    evacuate,
    evacuate_fast,
    jdt_slide_path,
    promote,
    promote_n,
    rotate180,
    validate,
)
from webvac.models.tableau import Shape, find_violation

COUNTS = [((2, 2), 2), ((2, 3), 5), ((3, 3), 42), ((4, 3), 462), ((5, 2), 42)]


def test_validate_returns_shape():
    """Test that a valid grid gets its shape."""

    t = validate([[1, 3], [2, 4], [5, 6]])

    # Assertions
    assert t.shape == Shape(n=3, k=2)
    assert t.shape.N == 6
    assert t.reading_word() == (1, 3, 2, 4, 5, 6)


def test_validate_ragged_grid():
    """Test that a ragged grid is not rectangular."""

    with pytest.raises(NotRectangular):
        validate([[1, 2], [3]])


def test_validate_not_bijective():
    """Test that repeated entries are rejected."""

    with pytest.raises(NotBijective):
        validate([[1, 2], [2, 4]])


def test_validate_row_violation_names_cell():
    """Test that a decreasing row reports the offending cell."""

    with pytest.raises(NotIncreasing) as exc_info:
        validate([[1, 3], [4, 2]])

    # Assertions
    assert exc_info.value.row == 2
    assert exc_info.value.column == 2
    assert isinstance(exc_info.value, ValueError)


def test_validate_column_violation():
    """Test that a decreasing column is rejected."""

    with pytest.raises(NotIncreasing) as exc_info:
        validate([[2, 3], [1, 4]])

    # Assertions
    assert (exc_info.value.row, exc_info.value.column) == (2, 1)
    assert "column 1" in str(exc_info.value)


def test_slide_path_and_final_state():
    """Test the hole's path when the NW entry is removed."""

    result = jdt_slide_path(validate([[1, 3], [2, 4], [5, 6]]))

    # Assertions
    assert result.path == ((1, 1), (2, 1), (2, 2), (3, 2))
    assert result.tableau.cells == ((2, 3), (4, 6), (5, None))


def test_slide_path_two_by_two():
    """Test a slide that goes right first."""

    result = jdt_slide_path(validate([[1, 2], [3, 4]]))

    # Assertions
    assert result.path == ((1, 1), (1, 2), (2, 2))
    assert result.tableau.cells == ((2, 4), (3, None))


def test_slide_rejects_other_corners():
    """Test that only the NW corner can be removed."""

    with pytest.raises(InputError):
        jdt_slide_path(validate([[1, 2], [3, 4]]), removed_corner=(2, 2))


def test_promote_two_by_two():
    """Test promotion on the two 2 x 2 tableaux."""

    first = validate([[1, 2], [3, 4]])
    second = validate([[1, 3], [2, 4]])

    # Assertions
    assert promote(first) == second
    assert promote(second) == first


def test_promotion_has_order_N_on_rectangles():
    """Test that N promotions return every 2 x 3 tableau to itself."""

    for t in enumerate_syt(Shape(n=2, k=3)):
        assert promote_n(t, 6) == t


def test_promote_n_zero_and_negative():
    """Test the trivial and invalid step counts."""

    t = validate([[1, 3], [2, 4], [5, 6]])

    # Assertions
    assert promote_n(t, 0) == t
    with pytest.raises(InputError):
        promote_n(t, -1)


@pytest.mark.parametrize(
    "entries, expected",
    [
        ([[1, 2], [3, 4], [5, 7], [6, 8], [9, 10]], [[1, 2], [3, 5], [4, 6], [7, 8], [9, 10]]),
        ([[1, 3, 5], [2, 4, 8], [6, 9, 10], [7, 11, 12]], [[1, 2, 6], [3, 4, 7], [5, 9, 11], [8, 10, 12]]),
        ([[1, 2, 3], [4, 5, 8], [6, 7, 9]], [[1, 3, 4], [2, 5, 6], [7, 8, 9]]),
        ([[1, 3], [2, 4], [5, 6]], [[1, 2], [3, 5], [4, 6]]),
    ],
)
def test_evacuate_golden(entries, expected):
    """Test evacuation of the worked examples with both algorithms."""

    t = validate(entries)

    # Assertions
    assert evacuate(t) == validate(expected)
    assert evacuate_fast(t) == validate(expected)


def test_evacuation_is_involution():
    """Test E(E(T)) = T over every 3 x 3 tableau."""

    for t in enumerate_syt(Shape(n=3, k=3)):
        assert evacuate(evacuate(t)) == t


@pytest.mark.parametrize("n, k", [(2, 4), (3, 2), (3, 3), (4, 2), (1, 4), (4, 1)])
def test_slides_agree_with_rotation(n, k):
    """Test that sliding evacuation equals rotate-and-complement."""

    for t in enumerate_syt(Shape(n=n, k=k)):
        assert evacuate(t) == evacuate_fast(t)


def test_rotate_and_complement():
    """Test the two halves of the evacuation shortcut."""

    t = validate([[1, 3, 5], [2, 4, 8], [6, 9, 10], [7, 11, 12]])
    rho = rotate180(t)

    # Assertions
    assert rho == ((12, 11, 7), (10, 9, 6), (8, 4, 2), (5, 3, 1))
    assert complement(rho, 12) == ((1, 2, 6), (3, 4, 7), (5, 9, 11), (8, 10, 12))


def test_complement_rejects_wrong_entries():
    """Test that complement needs the entries 1..N."""

    with pytest.raises(NotBijective):
        complement([[1, 2], [3, 5]], 4)


@pytest.mark.parametrize("dims, expected", COUNTS)
def test_count_matches_hook_length_values(dims, expected):
    """Test the hook-length count and the enumeration length."""

    shape = Shape(n=dims[0], k=dims[1])

    # Assertions
    assert count_syt(shape) == expected
    assert len(list(enumerate_syt(shape))) == expected


def _brute_force(n: int, k: int) -> int:
    count = 0
    for values in permutations(range(1, n * k + 1)):
        grid = [values[r * k:(r + 1) * k] for r in range(n)]
        if find_violation(grid) is None:
            count += 1
    return count


@pytest.mark.parametrize("n, k", [(2, 2), (2, 3), (3, 2), (2, 4), (4, 2)])
def test_count_matches_brute_force(n, k):
    """Test the count against filtering all permutations."""

    assert count_syt(Shape(n=n, k=k)) == _brute_force(n, k)


@pytest.mark.slow
def test_count_matches_brute_force_three_by_three():
    """Test the 3 x 3 count against all 9! fillings."""

    assert count_syt(Shape(n=3, k=3)) == _brute_force(3, 3)


def test_enumeration_order_and_distinctness():
    """Test that tableaux come sorted by reading word, each once."""

    words = [t.reading_word() for t in enumerate_syt(Shape(n=2, k=3))]

    # Assertions
    assert words == sorted(words)
    assert len(set(words)) == len(words)
    assert words[0] == (1, 2, 3, 4, 5, 6)
    assert words[-1] == (1, 3, 5, 2, 4, 6)


def test_single_row_has_one_tableau():
    """Test the degenerate one-row shape."""

    tableaux = list(enumerate_syt(Shape(n=1, k=4)))

    # Assertions
    assert len(tableaux) == 1
    assert tableaux[0].entries == ((1, 2, 3, 4),)


def test_budget_exceeded_is_eager():
    """Test that an over-budget shape fails before anything is generated."""

    with pytest.raises(BudgetExceeded) as exc_info:
        enumerate_syt(Shape(n=3, k=3), budget=10)

    # Assertions
    assert exc_info.value.count == 42
    assert exc_info.value.budget == 10


@patch.dict(os.environ, {"WEBVAC_BUDGET": "4"})
def test_budget_defaults_to_environment():
    """Test that the budget comes from WEBVAC_BUDGET when not given."""

    with pytest.raises(BudgetExceeded):
        enumerate_syt(Shape(n=2, k=3))
    assert len(list(enumerate_syt(Shape(n=2, k=2)))) == 2

"""
Test module for the line-oriented text formats
"""

from functools import lru_cache
from typing import Tuple

import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from webvac.core.errors import FormatError, NotIncreasing
from webvac.core.formats import (
    format_ncm,
    format_report,
    format_tableau,
    format_web,
    parse_any,
    parse_grid,
    parse_ncm,
    parse_tableau,
    parse_web,
)
from webvac.core.matching import ncm_from_tableau
from webvac.core.tableau import enumerate_syt, evacuate, rotate180, validate
from webvac.core.web import standardize_boundary, web_from_ncm
from webvac.models.tableau import Shape, StandardTableau
from webvac.models.verification import CheckOutcome, CheckStatus, VerificationReport

SL3_NCM = "ncm 3 9\narc 1 1 8\narc 1 2 5\narc 1 3 4\narc 2 4 7\narc 2 5 6\narc 2 8 9\n"
TWO_BY_TWO_WEB = "web 2 4\nedge b1 b4 1 u\nedge b2 b3 1 u\n"


def test_format_tableau(intro_tableau):
    """Test the exact tableau text."""

    # Assertions
    assert format_tableau(evacuate(intro_tableau)) == "tableau 5 2\n1 2\n3 5\n4 6\n7 8\n9 10\n"


def test_parse_rotated_grid(evac_flip_tableau):
    """Test that a non-standard grid parses without the standardness check."""

    text = "tableau 4 3\n12 11 7\n10 9 6\n8 4 2\n5 3 1\n"

    # Assertions
    assert parse_grid(text) == rotate180(evac_flip_tableau)


def test_parse_tableau(sl3_tableau):
    """Test parsing a valid tableau."""

    # Assertions
    assert parse_tableau("tableau 3 3\n1 2 3\n4 5 8\n6 7 9\n") == sl3_tableau


def test_parse_tableau_checks_standardness():
    """Test that a well-formed but decreasing grid is rejected as such."""

    with pytest.raises(NotIncreasing):
        parse_tableau("tableau 2 2\n1 3\n4 2\n")


def test_format_ncm(sl3_tableau):
    """Test the exact matching text, sorted by color then start."""

    # Assertions
    assert format_ncm(ncm_from_tableau(sl3_tableau)) == SL3_NCM
    assert parse_ncm(SL3_NCM) == ncm_from_tableau(sl3_tableau)


def test_format_two_row_web():
    """Test the web text of the 2 x 2 tableau with no interior vertices."""

    w = standardize_boundary(web_from_ncm(ncm_from_tableau(validate([[1, 2], [3, 4]]))))

    # Assertions
    assert format_web(w) == TWO_BY_TWO_WEB


def test_web_text_is_stable(sl3_tableau):
    """Test that printing a parsed web gives back the same text."""

    text = format_web(standardize_boundary(web_from_ncm(ncm_from_tableau(sl3_tableau))))
    parsed = parse_web(text)

    # Assertions
    assert text.startswith("web 3 9\nivertex 1 8 1\n")
    assert format_web(parsed) == text
    assert len(parsed.interior_vertices()) == 5
    assert all(len(e.path) == 2 for e in parsed.edges)


@pytest.mark.parametrize(
    "text, message",
    [
        ("tableau 2 2\n1 2\n01 4\n", "line 3: '01' is not a base-10 integer"),
        ("tableau 2 2\n1 2\n3 4", "text must end with a newline"),
        ("tableau 1 2\n1  2\n", "line 2: blank line or stray whitespace"),
        ("tableau 2 2\n1 2\n\n", "line 3: blank line or stray whitespace"),
        ("tableau 2 2\n1 2\n", "expected 2 rows, got 1"),
        ("tableau 2 2\n1 2\n3 4 5\n", "line 3: expected 2 entries, got 3"),
        ("tableaux 1 1\n1\n", "line 1: expected header 'tableau <a> <b>'"),
    ],
)
def test_grid_format_errors(text, message):
    """Test the strict tableau grammar."""

    with pytest.raises(FormatError) as exc_info:
        parse_tableau(text)

    # Assertions
    assert str(exc_info.value) == message


def test_format_error_records_line():
    """Test the line attribute of a FormatError."""

    with pytest.raises(FormatError) as exc_info:
        parse_tableau("tableau 2 2\n1 2\n3 -4\n")

    # Assertions
    assert exc_info.value.line == 3
    assert isinstance(exc_info.value, ValueError)


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("ncm 3 9\narc 1 2 5\narc 1 1 8\n", "line 3: arcs must be sorted"),
        ("ncm 2 2\narc 2 1 2\n", "line 2: color 2 is outside 1..1"),
        ("ncm 2 2\narc 1 2 1\n", "line 2: arc start 2 must be less than its end 1"),
        ("ncm 2 4\narc 1 1 2\n", "boundary point 3 is on no arc"),
        ("ncm 2 4\nedge 1 1 2\n", "line 2: expected 'arc <color> <i> <j>'"),
    ],
)
def test_ncm_format_errors(text, fragment):
    """Test the matching grammar and model errors."""

    with pytest.raises(FormatError) as exc_info:
        parse_ncm(text)

    # Assertions
    assert fragment in str(exc_info.value)


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("web 2 4\nedge b2 b3 1 u\nedge b1 b4 1 u\n", "canonical"),
        ("web 2 4\nedge b1 b4 1 x\nedge b2 b3 1 u\n", "line 2: unknown edge flag 'x'"),
        ("web 2 4\nedge b1 i1 1 -\nedge b2 b3 1 u\n", "unknown endpoint"),
        ("web 2 4\nedge b1 c4 1 u\n", "line 2: edge endpoints must be b<label> or i<id>"),
        ("web 3 3\nivertex 2 4 1\n", "line 2: expected interior vertex 1"),
        ("web 2 4\nedge b1 b4 1 u\nivertex 1 4 1\n", "line 3: expected an 'ivertex' or 'edge' line"),
    ],
)
def test_web_format_errors(text, fragment):
    """Test the web grammar and canonical order."""

    with pytest.raises(FormatError) as exc_info:
        parse_web(text)

    # Assertions
    assert fragment in str(exc_info.value)


def test_parse_any_dispatches_on_header(sl3_tableau):
    """Test that the header word picks the parser."""

    # Assertions
    assert parse_any(format_tableau(sl3_tableau)) == sl3_tableau
    assert parse_any(SL3_NCM) == ncm_from_tableau(sl3_tableau)
    assert parse_any(TWO_BY_TWO_WEB).N == 4
    with pytest.raises(FormatError):
        parse_any("matrix 1 1\n1\n")


def test_format_report_sorts_and_flattens():
    """Test report lines, the error line and newline replacement in witnesses."""

    failed = VerificationReport(
        shape=Shape(n=2, k=2),
        tableau_count=2,
        checks={
            "fast_evacuation": CheckOutcome(check="fast_evacuation", status=CheckStatus.PASS),
            "left_square": CheckOutcome(
                check="left_square", status=CheckStatus.FAIL, witness="word=1,2,3,4 ncm 2 4\narc 1 1 4\n"
            ),
        },
    )
    skipped = VerificationReport(
        shape=Shape(n=3, k=3), tableau_count=0, error="shape has 42 tableaux, budget is 10"
    )

    # Assertions
    assert format_report([skipped, failed]) == (
        "2x2 fast_evacuation pass -\n"
        "2x2 left_square fail word=1,2,3,4 ncm 2 4|arc 1 1 4|\n"
        "3x3 enumerate error shape has 42 tableaux, budget is 10\n"
    )
    assert format_report([]) == ""


@lru_cache(maxsize=None)
def _round_trip_pool() -> Tuple[StandardTableau, ...]:
    return tuple(enumerate_syt(Shape(n=4, k=3))) + tuple(enumerate_syt(Shape(n=3, k=4)))


pipeline_tableaux = st.deferred(lambda: st.sampled_from(_round_trip_pool()))


@pytest.mark.slow
@settings(
    max_examples=1000,
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
@given(pipeline_tableaux)
def test_text_round_trips(t):
    """Test print/parse/print on tableaux, matchings and webs of the pipeline."""

    m = ncm_from_tableau(t)
    web_text = format_web(standardize_boundary(web_from_ncm(m)))

    # Assertions
    assert parse_tableau(format_tableau(t)) == t
    assert parse_ncm(format_ncm(m)) == m
    assert format_web(parse_web(web_text)) == web_text

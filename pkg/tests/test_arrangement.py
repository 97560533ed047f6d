"""
Test module for exact arc arrangements
"""

import pytest

from webvac.core.arrangement import arc_apex, arrangement_from_ncm, crossing_point
from webvac.core.errors import NotStandardRectangular
from webvac.core.matching import ncm_from_tableau
from webvac.models.matching import Arc, ColoredMatching, MulticoloredNCM
from webvac.models.web import ArcEventKind, Point2


def test_apex_and_crossing_point():
    """Test the doubled coordinates of an apex and a crossing."""

    # Assertions
    assert arc_apex(Arc(i=3, j=7)) == Point2(x2=10, y2=4)
    assert crossing_point(Arc(i=1, j=4), Arc(i=3, j=7)) == Point2(x2=7, y2=1)


def test_intro_crossings(intro_tableau):
    """Test the two crossings and six shared points of the 5 x 2 example."""

    arrangement = arrangement_from_ncm(ncm_from_tableau(intro_tableau))

    # Assertions
    assert [c.point.key() for c in arrangement.crossings] == [(7, 1), (13, 1)]
    first, second = arrangement.crossings
    assert (first.lower.arc.key(), first.lower.color) == ((1, 4), 1)
    assert (first.upper.arc.key(), first.upper.color) == ((3, 7), 2)
    assert (second.lower.arc.key(), second.lower.color) == ((3, 7), 2)
    assert (second.upper.arc.key(), second.upper.color) == ((6, 10), 4)
    assert arrangement.shared_points == (3, 4, 5, 6, 7, 8)


def test_intro_traversal_events(intro_tableau):
    """Test the events met along the arc (3,7)."""

    arrangement = arrangement_from_ncm(ncm_from_tableau(intro_tableau))
    traversal = next(t for t in arrangement.traversals if t.arc == Arc(i=3, j=7))
    kinds = [e.kind for e in traversal.events]

    # Assertions
    assert kinds == [
        ArcEventKind.START,
        ArcEventKind.ASCENDING_CROSSING,
        ArcEventKind.APEX,
        ArcEventKind.DESCENDING_CROSSING,
        ArcEventKind.END,
    ]
    assert traversal.events[1].crossing == 0
    assert traversal.events[3].crossing == 1
    assert traversal.events[0].shared and traversal.events[-1].shared


def test_unshared_endpoints(intro_tableau):
    """Test that endpoints on a single arc are not flagged."""

    arrangement = arrangement_from_ncm(ncm_from_tableau(intro_tableau))
    traversal = next(t for t in arrangement.traversals if t.arc == Arc(i=1, j=4))

    # Assertions
    assert not traversal.events[0].shared
    assert traversal.events[-1].shared


def test_evac_flip_crossings(evac_flip_tableau):
    """Test the 4 x 3 example: two crossings, six shared points."""

    arrangement = arrangement_from_ncm(ncm_from_tableau(evac_flip_tableau))

    # Assertions
    assert [c.point.key() for c in arrangement.crossings] == [(11, 1), (19, 1)]
    assert arrangement.crossings[0].lower.arc == Arc(i=4, j=6)
    assert arrangement.crossings[0].upper.arc == Arc(i=5, j=8)
    assert arrangement.crossings[1].lower.arc == Arc(i=2, j=10)
    assert arrangement.crossings[1].upper.arc == Arc(i=9, j=12)
    assert arrangement.shared_points == (2, 4, 6, 8, 9, 10)


def test_sl3_single_crossing(sl3_tableau):
    """Test the 3 x 3 example: one crossing, three shared points."""

    arrangement = arrangement_from_ncm(ncm_from_tableau(sl3_tableau))

    # Assertions
    assert len(arrangement.crossings) == 1
    assert arrangement.crossings[0].point == Point2(x2=9, y2=1)
    assert arrangement.shared_points == (4, 5, 8)
    assert len(arrangement.traversals) == 6


def test_arrangement_rejects_nonstandard_matching():
    """Test that only matchings of tableaux get an arrangement."""

    m = MulticoloredNCM(
        n=3,
        N=4,
        layers=(
            ColoredMatching(color=1, arcs=(Arc(i=1, j=2), Arc(i=3, j=4))),
            ColoredMatching(color=2, arcs=(Arc(i=2, j=3),)),
        ),
    )

    with pytest.raises(NotStandardRectangular):
        arrangement_from_ncm(m)

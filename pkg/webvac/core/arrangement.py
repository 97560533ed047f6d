"""
Exact arc arrangements

Every arc (i, j) is drawn as two segments of slope +1 and -1 meeting at the apex
((i+j)/2, (j-i)/2). Coordinates are stored doubled so that every crossing is an
integer point. This module finds the crossings of a standard rectangular
matching and lists, for every arc, the events met while walking along it.
"""

import logging
from typing import Dict, List, Set, Tuple

from webvac.core.errors import DegenerateArrangement, NotStandardRectangular
from webvac.core.matching import is_standard_rectangular
from webvac.models.matching import Arc, MulticoloredNCM
from webvac.models.web import (
    ArcEvent,
    ArcEventKind,
    ArcTraversal,
    Arrangement,
    ColoredArc,
    Crossing,
    Point2,
)

logger = logging.getLogger(__name__)


def arc_apex(arc: Arc) -> Point2:
    return Point2(x2=arc.i + arc.j, y2=arc.j - arc.i)


def crossing_point(lower: Arc, upper: Arc) -> Point2:
    """Meeting point of the descending segment of lower and the ascending segment of upper."""
    return Point2(x2=upper.i + lower.j, y2=lower.j - upper.i)


def _find_crossings(colored: List[Tuple[int, Arc]]) -> List[Crossing]:
    crossings = []
    for a, (color_a, arc_a) in enumerate(colored):
        for color_b, arc_b in colored[a + 1 :]:
            if color_a == color_b or not arc_a.crosses(arc_b):
                continue
            (lc, lower), (uc, upper) = sorted(
                ((color_a, arc_a), (color_b, arc_b)), key=lambda ca: ca[1].key()
            )
            crossings.append(
                Crossing(
                    lower=ColoredArc(arc=lower, color=lc),
                    upper=ColoredArc(arc=upper, color=uc),
                    point=crossing_point(lower, upper),
                )
            )
    crossings.sort(key=lambda c: (c.point.key(), c.lower.color, c.upper.color))
    return crossings


def arrangement_from_ncm(m: MulticoloredNCM) -> Arrangement:
    """
    Compute the crossings and per-arc traversal events of a matching.

    Each traversal lists the start point, the crossings on the ascending
    segment by increasing x2, the apex, the crossings on the descending segment
    by increasing x2, and the end point. Start and end points that are shared
    by two arcs are flagged so the web construction can place a Y vertex there.

    Args:
        m: standard rectangular matching

    Returns:
        Arrangement: crossings sorted by point, traversals by (color, start)

    Raises:
        NotStandardRectangular: If m does not come from a rectangular tableau
        DegenerateArrangement: If two crossings coincide or a crossing is an apex
    """
    check = is_standard_rectangular(m)
    if not check.ok:
        raise NotStandardRectangular(check.reason or "matching is not standard rectangular")

    colored = list(m.colored_arcs())
    crossings = _find_crossings(colored)

    points = [c.point.key() for c in crossings]
    if len(points) != len(set(points)):
        raise DegenerateArrangement("two crossings share a point")
    apexes = {arc_apex(arc).key(): arc for _, arc in colored}
    for c in crossings:
        if c.point.key() in apexes:
            raise DegenerateArrangement(
                f"crossing of {c.lower.arc} and {c.upper.arc} lies on the apex of {apexes[c.point.key()]}"
            )

    starts: Set[int] = {arc.i for _, arc in colored}
    ends: Set[int] = {arc.j for _, arc in colored}
    shared = tuple(sorted(starts & ends))

    ascending: Dict[Tuple[int, Arc], List[int]] = {ca: [] for ca in colored}
    descending: Dict[Tuple[int, Arc], List[int]] = {ca: [] for ca in colored}
    for idx, c in enumerate(crossings):
        ascending[(c.upper.color, c.upper.arc)].append(idx)
        descending[(c.lower.color, c.lower.arc)].append(idx)

    traversals = []
    for color, arc in colored:
        events = [
            ArcEvent(
                kind=ArcEventKind.START,
                point=Point2(x2=2 * arc.i, y2=0),
                shared=arc.i in ends,
            )
        ]
        for idx in sorted(ascending[(color, arc)], key=lambda i: crossings[i].point.x2):
            events.append(
                ArcEvent(kind=ArcEventKind.ASCENDING_CROSSING, point=crossings[idx].point, crossing=idx)
            )
        events.append(ArcEvent(kind=ArcEventKind.APEX, point=arc_apex(arc)))
        for idx in sorted(descending[(color, arc)], key=lambda i: crossings[i].point.x2):
            events.append(
                ArcEvent(kind=ArcEventKind.DESCENDING_CROSSING, point=crossings[idx].point, crossing=idx)
            )
        events.append(
            ArcEvent(
                kind=ArcEventKind.END,
                point=Point2(x2=2 * arc.j, y2=0),
                shared=arc.j in starts,
            )
        )
        traversals.append(ArcTraversal(arc=arc, color=color, events=tuple(events)))

    logger.debug(f"Arrangement has {len(crossings)} crossings and {len(shared)} shared points")
    return Arrangement(
        n=m.n,
        N=m.N,
        crossings=tuple(crossings),
        traversals=tuple(traversals),
        shared_points=shared,
    )

"""
Multicolored noncrossing matchings

This module converts rectangular tableaux (and their 180 degree rotations) into
multicolored noncrossing matchings, reflects matchings, recognizes the
matchings that come from tableaux and converts them back.
"""

import logging
from collections import defaultdict
from typing import Dict, List, Sequence, Tuple

from webvac.core.errors import InputError, InternalCheckError, NotStandardRectangular
from webvac.core.tableau import grid_shape, rotate180, validate
from webvac.models.matching import Arc, ColoredMatching, MulticoloredNCM, StandardRectangularCheck
from webvac.models.tableau import StandardTableau

logger = logging.getLogger(__name__)


def _pair_rows(upper: Sequence[int], lower: Sequence[int], color: int) -> ColoredMatching:
    """Pair each entry of lower, left to right, with the rightmost free smaller entry of upper."""
    paired = [False] * len(upper)
    arcs = []
    for j in lower:
        for idx in range(len(upper) - 1, -1, -1):
            if not paired[idx] and upper[idx] < j:
                paired[idx] = True
                arcs.append(Arc(i=upper[idx], j=j))
                break
        else:
            raise InternalCheckError(f"entry {j} has no free smaller partner in row {color}")
    return ColoredMatching(color=color, arcs=tuple(arcs))


def ncm_from_tableau(t: StandardTableau) -> MulticoloredNCM:
    """
    Build the multicolored matching of a rectangular tableau.

    Layer x pairs row x with row x + 1: every entry j of row x + 1, read left to
    right, is matched to the rightmost unpaired entry of row x smaller than j.

    Args:
        t: tableau with at least two rows

    Returns:
        MulticoloredNCM: n - 1 layers of k arcs each

    Raises:
        InputError: If t has a single row
    """
    n = t.shape.n
    if n < 2:
        raise InputError("a tableau needs at least two rows to define a matching")

    layers = tuple(_pair_rows(t.entries[x - 1], t.entries[x], x) for x in range(1, n))
    logger.debug(f"Built {n - 1} layers of {t.shape.k} arcs from a {t.shape} tableau")
    return MulticoloredNCM(n=n, N=t.shape.N, layers=layers)


def ncm_from_rotated_tableau(rho: Sequence[Sequence[int]]) -> MulticoloredNCM:
    """
    Build the rotated matching of a 180 degree rotated tableau.

    Layer x pairs row x with row x + 1 of rho: every entry j of row x, read right
    to left, is matched to the leftmost unpaired entry of row x + 1 smaller than j.

    Args:
        rho: rotation of a rectangular tableau with at least two rows

    Returns:
        MulticoloredNCM: the rotated matching

    Raises:
        InputError: If rho is not the rotation of a standard tableau
    """
    shape = grid_shape(rho)
    if shape.n < 2:
        raise InputError("a tableau needs at least two rows to define a matching")
    validate([list(reversed(row)) for row in reversed(rho)])

    layers = []
    for x in range(1, shape.n):
        upper, lower = rho[x - 1], rho[x]
        paired = [False] * shape.k
        arcs = []
        for j in reversed(upper):
            for idx in range(shape.k):
                if not paired[idx] and lower[idx] < j:
                    paired[idx] = True
                    arcs.append(Arc(i=lower[idx], j=j))
                    break
            else:
                raise InternalCheckError(f"entry {j} has no free smaller partner in row {x + 1}")
        layers.append(ColoredMatching(color=x, arcs=tuple(arcs)))
    return MulticoloredNCM(n=shape.n, N=shape.N, layers=tuple(layers))


def _incidence(m: MulticoloredNCM) -> Dict[int, List[Tuple[int, Arc]]]:
    points: Dict[int, List[Tuple[int, Arc]]] = defaultdict(list)
    for color, arc in m.colored_arcs():
        points[arc.i].append((color, arc))
        points[arc.j].append((color, arc))
    return points


def is_standard_rectangular(m: MulticoloredNCM) -> StandardRectangularCheck:
    """
    Check whether a multicolored matching has the shape of one built from a tableau.

    For an arc (i, j) of color x: if x > 1, i is shared with exactly one other
    arc and that arc is in layer x - 1; if x = 1, i is on no other arc. If
    x < n - 1, j is shared with exactly one other arc and that arc is in layer
    x + 1; if x = n - 1, j is on no other arc.

    Returns:
        StandardRectangularCheck: the first violation in (layer, start) order
    """
    points = _incidence(m)
    last = m.n - 1

    for color, arc in m.colored_arcs():
        others = [(c, a) for c, a in points[arc.i] if (c, a) != (color, arc)]
        if color == 1 and others:
            return StandardRectangularCheck(
                ok=False, color=color, arc=arc, endpoint=arc.i,
                reason=f"start {arc.i} of {arc} in layer 1 is shared with another arc",
            )
        if color > 1 and (len(others) != 1 or others[0][0] != color - 1):
            return StandardRectangularCheck(
                ok=False, color=color, arc=arc, endpoint=arc.i,
                reason=f"start {arc.i} of {arc} in layer {color} is not shared with exactly one arc of layer {color - 1}",
            )

        others = [(c, a) for c, a in points[arc.j] if (c, a) != (color, arc)]
        if color == last and others:
            return StandardRectangularCheck(
                ok=False, color=color, arc=arc, endpoint=arc.j,
                reason=f"end {arc.j} of {arc} in layer {last} is shared with another arc",
            )
        if color < last and (len(others) != 1 or others[0][0] != color + 1):
            return StandardRectangularCheck(
                ok=False, color=color, arc=arc, endpoint=arc.j,
                reason=f"end {arc.j} of {arc} in layer {color} is not shared with exactly one arc of layer {color + 1}",
            )

    return StandardRectangularCheck(ok=True)


def reflect_ncm(m: MulticoloredNCM) -> MulticoloredNCM:
    """Map every arc (i, j) of color x to the arc (N+1-j, N+1-i) of color n-x."""
    layers = tuple(
        ColoredMatching(
            color=color,
            arcs=tuple(
                Arc(i=m.N + 1 - arc.j, j=m.N + 1 - arc.i) for arc in m.layer(m.n - color).arcs
            ),
        )
        for color in range(1, m.n)
    )
    return MulticoloredNCM(n=m.n, N=m.N, layers=layers)


def tableau_from_ncm(m: MulticoloredNCM) -> StandardTableau:
    """
    Recover the tableau a standard rectangular matching was built from.

    Row 1 holds the sorted starts of layer 1; row x + 1 holds the sorted ends of
    layer x.

    Raises:
        NotStandardRectangular: If m does not come from a rectangular tableau
    """
    check = is_standard_rectangular(m)
    if not check.ok:
        raise NotStandardRectangular(check.reason or "matching is not standard rectangular")

    rows = [sorted(arc.i for arc in m.layer(1).arcs)]
    rows.extend(sorted(arc.j for arc in m.layer(x).arcs) for x in range(1, m.n))
    try:
        t = validate(rows)
    except InputError as e:
        raise NotStandardRectangular(f"reconstructed rows are not a tableau: {e}") from e

    if ncm_from_tableau(t) != m:
        raise NotStandardRectangular("matching is not the matching of its reconstructed tableau")
    return t


def rotated_ncm_of(t: StandardTableau) -> MulticoloredNCM:
    """The rotated matching of t, built from rotate180(t)."""
    return ncm_from_rotated_tableau(rotate180(t))

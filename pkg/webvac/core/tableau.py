"""
Rectangular standard Young tableaux

This module implements validation, jeu de taquin, promotion, evacuation, the
rotate-and-complement shortcut for evacuation on rectangles, and enumeration
and counting of the tableaux of a shape.
"""

import logging
import math
from typing import Iterator, List, Optional, Sequence, Tuple

from webvac.core.config import get_enumeration_budget
from webvac.core.errors import (
    BudgetExceeded,
    InputError,
    InternalCheckError,
    NotBijective,
    NotIncreasing,
    NotRectangular,
)
from webvac.models.tableau import (
    Cell,
    Grid,
    Shape,
    SlideResult,
    SlidingTableau,
    StandardTableau,
    find_violation,
)

logger = logging.getLogger(__name__)

_Cells = List[List[Optional[int]]]


def grid_shape(grid: Sequence[Sequence[int]]) -> Shape:
    """
    Get the shape of a rectangular grid.

    Raises:
        NotRectangular: If the grid is empty or ragged
    """
    if not grid or not grid[0]:
        raise NotRectangular("grid must have at least one row and one column")
    k = len(grid[0])
    for r, row in enumerate(grid):
        if len(row) != k:
            raise NotRectangular(f"row {r + 1} has {len(row)} entries, expected {k}")
    return Shape(n=len(grid), k=k)


def validate(grid: Sequence[Sequence[int]]) -> StandardTableau:
    """
    Validate a grid as a rectangular standard Young tableau.

    Args:
        grid: rows of integers, top row first

    Returns:
        StandardTableau: the validated tableau

    Raises:
        NotRectangular: If the rows do not form a rectangle
        NotBijective: If the entries are not exactly 1..N
        NotIncreasing: If a row or column is not strictly increasing
    """
    shape = grid_shape(grid)
    entries: Grid = tuple(tuple(int(v) for v in row) for row in grid)

    violation = find_violation(entries)
    if violation is not None:
        if violation.kind == "bijective":
            raise NotBijective(violation.message)
        raise NotIncreasing(violation.message, violation.row, violation.column)

    return StandardTableau(shape=shape, entries=entries)


def _slide(cells: _Cells, r: int, c: int) -> List[Tuple[int, int]]:
    """
    Slide the hole at (r, c) southeast in place, returning the 0-based path.

    Only positive entries move; negative (fixed) cells count as absent.
    """
    n, k = len(cells), len(cells[0])
    path = [(r, c)]
    while True:
        right = cells[r][c + 1] if c + 1 < k else None
        below = cells[r + 1][c] if r + 1 < n else None
        if right is not None and right < 0:
            right = None
        if below is not None and below < 0:
            below = None
        if right is None and below is None:
            return path
        if right == below:
            raise InternalCheckError(f"equal neighbors {right} next to the hole at {(r + 1, c + 1)}")

        if below is None or (right is not None and right < below):
            cells[r][c] = right
            c += 1
        else:
            cells[r][c] = below
            r += 1
        cells[r][c] = None
        path.append((r, c))


def jdt_slide_path(t: StandardTableau, removed_corner: Cell = (1, 1)) -> SlideResult:
    """
    Remove the northwest entry and slide the hole as far southeast as it goes.

    Args:
        t: tableau to slide in
        removed_corner: cell whose entry is removed; only (1, 1) is supported

    Returns:
        SlideResult: the final filling with one empty cell, and the hole's path

    Raises:
        InputError: If removed_corner is not the northwest corner
    """
    if tuple(removed_corner) != (1, 1):
        raise InputError(f"only the northwest corner can be removed, got {removed_corner}")

    cells: _Cells = [list(row) for row in t.entries]
    cells[0][0] = None
    path = _slide(cells, 0, 0)

    return SlideResult(
        tableau=SlidingTableau(shape=t.shape, cells=tuple(tuple(row) for row in cells)),
        path=tuple((r + 1, c + 1) for r, c in path),
    )


def promote(t: StandardTableau) -> StandardTableau:
    """
    Promote a tableau.

    The entry 1 is removed, the hole slides to the southeast corner, every
    entry is decreased by one and N is written into the hole.
    """
    cells: _Cells = [list(row) for row in t.entries]
    cells[0][0] = None
    r, c = _slide(cells, 0, 0)[-1]
    cells[r][c] = t.shape.N + 1

    return StandardTableau(
        shape=t.shape,
        entries=tuple(tuple(v - 1 for v in row) for row in cells),  # type: ignore[operator]
    )


def promote_n(t: StandardTableau, steps: int) -> StandardTableau:
    """
    Apply promotion a number of times.

    Raises:
        InputError: If steps is negative
    """
    if steps < 0:
        raise InputError(f"steps must be non-negative, got {steps}")
    for _ in range(steps):
        t = promote(t)
    return t


def evacuate(t: StandardTableau) -> StandardTableau:
    """
    Evacuate a tableau by repeated remove, slide and fix.

    Each round removes the northwest entry, slides the hole southeast among the
    cells that are still positive, and writes the negated removed entry into
    the hole. When every cell is negative, N + 1 is added to every entry.

    Args:
        t: tableau to evacuate

    Returns:
        StandardTableau: E(t)
    """
    cells: _Cells = [list(row) for row in t.entries]
    while cells[0][0] is not None and cells[0][0] > 0:
        removed = cells[0][0]
        cells[0][0] = None
        r, c = _slide(cells, 0, 0)[-1]
        cells[r][c] = -removed

    offset = t.shape.N + 1
    return StandardTableau(
        shape=t.shape,
        entries=tuple(tuple(v + offset for v in row) for row in cells),  # type: ignore[operator]
    )


def rotate180(t: StandardTableau) -> Grid:
    """Rotate a tableau by 180 degrees; the result decreases along rows and columns."""
    return tuple(tuple(reversed(row)) for row in reversed(t.entries))


def complement(grid: Sequence[Sequence[int]], N: int) -> Grid:
    """
    Replace every entry i of a grid by N + 1 - i.

    Raises:
        NotBijective: If the entries are not exactly 1..N
    """
    values = sorted(v for row in grid for v in row)
    if values != list(range(1, N + 1)):
        raise NotBijective(f"grid entries are not 1..{N}")
    return tuple(tuple(N + 1 - v for v in row) for row in grid)


def evacuate_fast(t: StandardTableau) -> StandardTableau:
    """Evacuate a rectangular tableau as complement(rotate180(t))."""
    return StandardTableau(shape=t.shape, entries=complement(rotate180(t), t.shape.N))


def count_syt(shape: Shape) -> int:
    """Number of standard Young tableaux of a rectangle, by the hook-length formula."""
    hooks = math.prod(
        (shape.k - c - 1) + (shape.n - r - 1) + 1
        for r in range(shape.n)
        for c in range(shape.k)
    )
    return math.factorial(shape.N) // hooks


def _fill(shape: Shape) -> Iterator[Grid]:
    lengths = [0] * shape.n
    grid = [[0] * shape.k for _ in range(shape.n)]

    def place(value: int) -> Iterator[Grid]:
        if value > shape.N:
            yield tuple(tuple(row) for row in grid)
            return
        for r in range(shape.n):
            if lengths[r] < shape.k and (r == 0 or lengths[r - 1] > lengths[r]):
                grid[r][lengths[r]] = value
                lengths[r] += 1
                yield from place(value + 1)
                lengths[r] -= 1

    yield from place(1)


def enumerate_syt(shape: Shape, budget: Optional[int] = None) -> Iterator[StandardTableau]:
    """
    Enumerate every standard Young tableau of a shape.

    Tableaux come in lexicographic order of their row-major reading words.

    Args:
        shape: rectangle to fill
        budget: maximum number of tableaux; defaults to the configured budget

    Returns:
        Iterator[StandardTableau]: single-consumer iterator over the tableaux

    Raises:
        BudgetExceeded: If the shape has more tableaux than the budget
    """
    if budget is None:
        budget = get_enumeration_budget()
    count = count_syt(shape)
    if count > budget:
        raise BudgetExceeded(count, budget)

    logger.debug(f"Enumerating {count} tableaux of shape {shape}")
    grids = sorted(_fill(shape), key=lambda g: tuple(v for row in g for v in row))
    return iter([StandardTableau(shape=shape, entries=g) for g in grids])

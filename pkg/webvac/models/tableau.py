"""
Tableau models for webvac

This module defines rectangular shapes, standard Young tableaux of those shapes
and the intermediate fillings that jeu de taquin passes through.
"""

from typing import NamedTuple, Optional, Sequence, Tuple

from pydantic import BaseModel, Field, computed_field, model_validator

Grid = Tuple[Tuple[int, ...], ...]
Cell = Tuple[int, int]


class TableauViolation(NamedTuple):
    """First reason a grid is not a standard filling; cells are 1-based."""

    kind: str
    row: int
    column: int
    message: str


def find_violation(entries: Sequence[Sequence[int]]) -> Optional[TableauViolation]:
    """
    Find the first reason a rectangular grid is not a standard Young tableau.

    Bijectivity is checked first; after that cells are scanned in row-major
    order, checking the cell to the left and the cell above.

    Args:
        entries: rectangular grid of integers

    Returns:
        Optional[TableauViolation]: None when the grid is standard
    """
    size = sum(len(row) for row in entries)
    seen = sorted(value for row in entries for value in row)
    if seen != list(range(1, size + 1)):
        missing = sorted(set(range(1, size + 1)) - set(seen))
        detail = f"missing {missing[0]}" if missing else "repeated or out of range"
        return TableauViolation("bijective", 0, 0, f"entries are not 1..{size}: {detail}")

    for r, row in enumerate(entries):
        for c, value in enumerate(row):
            if c > 0 and row[c - 1] >= value:
                return TableauViolation(
                    "row", r + 1, c + 1, f"row {r + 1} decreases at column {c + 1}"
                )
            if r > 0 and entries[r - 1][c] >= value:
                return TableauViolation(
                    "column", r + 1, c + 1, f"column {c + 1} decreases at row {r + 1}"
                )
    return None


class Shape(BaseModel):
    """
    An n x k rectangle.

    Attributes:
        n: number of rows
        k: number of columns
    """

    n: int = Field(..., ge=1, description="Number of rows")
    k: int = Field(..., ge=1, description="Number of columns")

    model_config = {
        "frozen": True,
        "json_schema_extra": {"example": {"n": 3, "k": 2, "N": 6}},
    }

    @computed_field  # type: ignore[prop-decorator]
    @property
    def N(self) -> int:
        """Number of boxes."""
        return self.n * self.k

    def __str__(self) -> str:
        return f"{self.n}x{self.k}"


class StandardTableau(BaseModel):
    """
    A standard Young tableau of rectangular shape.

    Rows are listed top to bottom. Entries are a bijection onto 1..N, increasing
    along rows and down columns.
    """

    shape: Shape = Field(..., description="Shape of the tableau")
    entries: Grid = Field(..., description="Rows of the tableau, top row first")

    model_config = {
        "frozen": True,
        "json_schema_extra": {
            "example": {
                "shape": {"n": 3, "k": 2},
                "entries": [[1, 3], [2, 4], [5, 6]],
            }
        },
    }

    @model_validator(mode="after")
    def _check_standard(self) -> "StandardTableau":
        if len(self.entries) != self.shape.n or any(
            len(row) != self.shape.k for row in self.entries
        ):
            raise ValueError(f"entries do not have shape {self.shape}")
        violation = find_violation(self.entries)
        if violation is not None:
            raise ValueError(violation.message)
        return self

    def reading_word(self) -> Tuple[int, ...]:
        """Entries in row-major order."""
        return tuple(value for row in self.entries for value in row)


class SlidingTableau(BaseModel):
    """
    A filling in the middle of a jeu de taquin slide.

    Cells hold a positive entry, a negative (fixed) entry, or None for the hole.
    """

    shape: Shape = Field(..., description="Shape of the filling")
    cells: Tuple[Tuple[Optional[int], ...], ...] = Field(
        ..., description="Rows of cells; None marks the empty cell"
    )

    model_config = {"frozen": True}

    @model_validator(mode="after")
    def _check_single_hole(self) -> "SlidingTableau":
        holes = sum(1 for row in self.cells for value in row if value is None)
        if holes > 1:
            raise ValueError(f"a sliding tableau has at most one empty cell, got {holes}")
        return self


class SlideResult(BaseModel):
    """Final state of a slide and the cells the hole visited (1-based)."""

    tableau: SlidingTableau = Field(..., description="State after the last slide")
    path: Tuple[Cell, ...] = Field(..., description="Cells visited by the hole")

    model_config = {"frozen": True}


class GridResponse(BaseModel):
    """A raw grid that is not necessarily a standard tableau."""

    shape: Shape = Field(..., description="Shape of the grid")
    entries: Grid = Field(..., description="Rows of the grid, top row first")

    model_config = {
        "json_schema_extra": {
            "example": {"shape": {"n": 2, "k": 2}, "entries": [[4, 3], [2, 1]]}
        }
    }


class GridRequest(BaseModel):
    """Request body carrying a grid of entries, top row first."""

    entries: Grid = Field(..., min_length=1, description="Rows of the grid, top row first")

    model_config = {
        "json_schema_extra": {"example": {"entries": [[1, 3], [2, 4], [5, 6]]}}
    }


class SlideRequest(BaseModel):
    """A tableau and the 1-based cell to empty before sliding."""

    entries: Grid = Field(..., min_length=1, description="Rows of the tableau, top row first")
    corner: Cell = Field((1, 1), description="Cell removed before the slide, 1-based")

    model_config = {
        "json_schema_extra": {"example": {"entries": [[1, 3], [2, 4], [5, 6]], "corner": [1, 1]}}
    }

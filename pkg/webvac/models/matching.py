"""
Matching models for webvac

This module defines arcs over a labeled baseline, noncrossing matchings of a
single color and the multicolored noncrossing matchings built from tableaux.
"""

from typing import Iterator, Optional, Tuple

from pydantic import BaseModel, Field, field_validator, model_validator


class Arc(BaseModel):
    """
    An arc from boundary point i to boundary point j, drawn above the baseline.

    Attributes:
        i: start point
        j: end point, larger than i
    """

    i: int = Field(..., ge=1, description="Start point")
    j: int = Field(..., ge=2, description="End point")

    model_config = {"frozen": True, "json_schema_extra": {"example": {"i": 4, "j": 6}}}

    @model_validator(mode="after")
    def _check_order(self) -> "Arc":
        if self.i >= self.j:
            raise ValueError(f"arc start {self.i} must be less than its end {self.j}")
        return self

    def key(self) -> Tuple[int, int]:
        return (self.i, self.j)

    def crosses(self, other: "Arc") -> bool:
        """True when the two arcs interleave as i < i' < j < j' in some order."""
        first, second = sorted((self, other), key=Arc.key)
        return first.i < second.i < first.j < second.j

    def __str__(self) -> str:
        return f"({self.i},{self.j})"


class ColoredMatching(BaseModel):
    """
    A noncrossing matching whose arcs all carry one color.

    Arcs are stored sorted by start point.
    """

    color: int = Field(..., ge=1, description="Color x of every arc in the layer")
    arcs: Tuple[Arc, ...] = Field(..., description="Arcs sorted by start point")

    model_config = {
        "frozen": True,
        "json_schema_extra": {
            "example": {"color": 1, "arcs": [{"i": 1, "j": 4}, {"i": 2, "j": 3}]}
        },
    }

    @field_validator("arcs")
    @classmethod
    def _sort_arcs(cls, arcs: Tuple[Arc, ...]) -> Tuple[Arc, ...]:
        return tuple(sorted(arcs, key=Arc.key))

    @model_validator(mode="after")
    def _check_noncrossing(self) -> "ColoredMatching":
        points = [p for arc in self.arcs for p in (arc.i, arc.j)]
        if len(points) != len(set(points)):
            raise ValueError(f"arcs of color {self.color} share a boundary point")
        for a, first in enumerate(self.arcs):
            for second in self.arcs[a + 1 :]:
                if first.crosses(second):
                    raise ValueError(
                        f"arcs {first} and {second} of color {self.color} cross"
                    )
        return self


class MulticoloredNCM(BaseModel):
    """
    One noncrossing matching per color 1..n-1 on the boundary points 1..N.

    Arcs of different colors may cross. Every boundary point is an endpoint of
    at least one arc.
    """

    n: int = Field(..., ge=2, description="Rank parameter; colors run over 1..n-1")
    N: int = Field(..., ge=1, description="Number of boundary points")
    layers: Tuple[ColoredMatching, ...] = Field(..., description="Layers by color")

    model_config = {
        "frozen": True,
        "json_schema_extra": {
            "example": {
                "n": 2,
                "N": 4,
                "layers": [{"color": 1, "arcs": [{"i": 1, "j": 2}, {"i": 3, "j": 4}]}],
            }
        },
    }

    @model_validator(mode="after")
    def _check_layers(self) -> "MulticoloredNCM":
        colors = [layer.color for layer in self.layers]
        if colors != list(range(1, self.n)):
            raise ValueError(f"layers must have colors 1..{self.n - 1}, got {colors}")

        covered = set()
        for layer in self.layers:
            for arc in layer.arcs:
                if arc.j > self.N:
                    raise ValueError(f"arc {arc} leaves the boundary 1..{self.N}")
                covered.update((arc.i, arc.j))
        uncovered = sorted(set(range(1, self.N + 1)) - covered)
        if uncovered:
            raise ValueError(f"boundary point {uncovered[0]} is on no arc")
        return self

    def layer(self, color: int) -> ColoredMatching:
        return self.layers[color - 1]

    def colored_arcs(self) -> Iterator[Tuple[int, Arc]]:
        """Yield (color, arc) pairs sorted by color, then start point."""
        for layer in self.layers:
            for arc in layer.arcs:
                yield layer.color, arc


class StandardRectangularCheck(BaseModel):
    """
    Outcome of testing a multicolored matching for the rectangular conditions.

    On failure the first violation in (layer, start point) order is reported.
    """

    ok: bool = Field(..., description="Whether every condition holds")
    color: Optional[int] = Field(None, description="Color of the violating arc")
    arc: Optional[Arc] = Field(None, description="The violating arc")
    endpoint: Optional[int] = Field(None, description="The violating endpoint")
    reason: Optional[str] = Field(None, description="Which condition failed")

    model_config = {
        "json_schema_extra": {
            "example": {
                "ok": False,
                "color": 2,
                "arc": {"i": 3, "j": 7},
                "endpoint": 3,
                "reason": "start 3 of (3,7) in layer 2 is not the end of exactly one arc of layer 1",
            }
        }
    }

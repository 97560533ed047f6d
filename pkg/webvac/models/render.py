"""
Render models for webvac

This module defines what to draw and how: matchings or webs, as SVG or TikZ,
with a scale and a color palette indexed by arc color.
"""

from enum import Enum
from typing import Tuple

from pydantic import BaseModel, Field

DEFAULT_PALETTE: Tuple[str, ...] = (
    "blue",
    "red",
    "green",
    "violet",
    "orange",
    "teal",
    "brown",
    "magenta",
)


class RenderKind(str, Enum):
    NCM = "ncm"
    WEB = "web"


class RenderFormat(str, Enum):
    SVG = "svg"
    TIKZ = "tikz"


class RenderSpec(BaseModel):
    """
    Drawing options.

    Attributes:
        kind: what the object must be
        format: output document type
        scale: positive scale factor
        palette: display colors; color x uses entry x - 1, cycling
    """

    kind: RenderKind = Field(..., description="Kind of object to draw")
    format: RenderFormat = Field(RenderFormat.SVG, description="Output format")
    scale: float = Field(1.0, gt=0, description="Scale factor")
    palette: Tuple[str, ...] = Field(DEFAULT_PALETTE, min_length=1, description="Colors by arc color")

    model_config = {
        "frozen": True,
        "json_schema_extra": {"example": {"kind": "ncm", "format": "tikz", "scale": 1.0}},
    }

    def color_for(self, color: int) -> str:
        return self.palette[(color - 1) % len(self.palette)]

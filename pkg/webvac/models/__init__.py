"""
Data models for webvac

This package contains Pydantic models for every value that flows through the
pipeline. All domain models are frozen; validators enforce the invariants of
each type so that an instance that exists is a valid one.

Models:
- Shape, StandardTableau, SlidingTableau, SlideResult: tableaux and slides
- Arc, ColoredMatching, MulticoloredNCM: matchings
- WebVertex, WebEdge, WebGraph: web graphs, with the geometry they are built from
- CheckOutcome, VerificationReport: verifier output
- RenderSpec: drawing options
- ErrorResponse, APIInfo: HTTP responses
"""

# Re-export models for easier imports
from webvac.models.tableau import Shape, StandardTableau, SlidingTableau, SlideResult
from webvac.models.matching import Arc, ColoredMatching, MulticoloredNCM, StandardRectangularCheck
from webvac.models.web import (
    Point2,
    Crossing,
    Arrangement,
    WebVertex,
    WebEdge,
    WebGraph,
    EqualityMode,
    FlowCheck,
    EqualityCheck,
)
from webvac.models.verification import CheckOutcome, CheckStatus, VerificationReport
from webvac.models.render import RenderSpec, RenderKind, RenderFormat
from webvac.models.common import ErrorResponse, APIInfo

"""
Web graph models for webvac

This module defines the exact geometry used to build webs (doubled integer
coordinates, crossings and per-arc traversal events) and the web graphs
themselves: vertices, weighted directed edges with provenance, and reports
produced by the flow, planarity and equality checks.
"""

from enum import Enum
from typing import List, Optional, Tuple

from pydantic import BaseModel, Field, model_validator

from webvac.models.matching import Arc


class Point2(BaseModel):
    """A point with doubled integer coordinates, so half-integers stay exact."""

    x2: int = Field(..., description="Twice the x coordinate")
    y2: int = Field(..., ge=0, description="Twice the y coordinate")

    model_config = {"frozen": True, "json_schema_extra": {"example": {"x2": 7, "y2": 1}}}

    def key(self) -> Tuple[int, int]:
        return (self.x2, self.y2)


class ColoredArc(BaseModel):
    """An arc together with the color of the layer it belongs to."""

    arc: Arc
    color: int = Field(..., ge=1)

    model_config = {"frozen": True}


class Crossing(BaseModel):
    """
    A crossing of two arcs of different colors.

    The lower arc (i,j) and the upper arc (i',j') satisfy i < i' < j < j'. The
    crossing lies on the descending segment of the lower arc and on the
    ascending segment of the upper arc.
    """

    lower: ColoredArc = Field(..., description="Arc with the smaller start point")
    upper: ColoredArc = Field(..., description="Arc with the larger start point")
    point: Point2 = Field(..., description="Crossing point")

    model_config = {"frozen": True}


class ArcEventKind(str, Enum):
    """Kinds of events met while traversing an arc from start to end."""

    START = "start"
    ASCENDING_CROSSING = "ascending_crossing"
    APEX = "apex"
    DESCENDING_CROSSING = "descending_crossing"
    END = "end"


class ArcEvent(BaseModel):
    """One event on an arc traversal; crossing indexes Arrangement.crossings."""

    kind: ArcEventKind
    point: Point2
    crossing: Optional[int] = Field(None, ge=0)
    shared: bool = Field(False, description="Start or end point shared with another arc")

    model_config = {"frozen": True}


class ArcTraversal(BaseModel):
    """Ordered events of a single arc, start to end."""

    arc: Arc
    color: int = Field(..., ge=1)
    events: Tuple[ArcEvent, ...]

    model_config = {"frozen": True}


class Arrangement(BaseModel):
    """
    Exact geometric realization of a standard rectangular matching.

    Crossings are sorted by point; traversals by (color, start point).
    """

    n: int = Field(..., ge=2)
    N: int = Field(..., ge=1)
    crossings: Tuple[Crossing, ...]
    traversals: Tuple[ArcTraversal, ...]
    shared_points: Tuple[int, ...] = Field(
        ..., description="Boundary points that end one arc and start another"
    )

    model_config = {"frozen": True}


class VertexKind(str, Enum):
    BOUNDARY = "boundary"
    INTERIOR = "interior"


class WebVertex(BaseModel):
    """
    A vertex of a web graph.

    Attributes:
        id: token used by edges, "b<label>" for boundary vertices, "i<id>" otherwise
        kind: boundary or interior
        label: boundary label 1..N, None for interior vertices
        position: doubled coordinates
    """

    id: str = Field(..., pattern=r"^[bi][1-9][0-9]*$", description="Vertex token")
    kind: VertexKind
    label: Optional[int] = Field(None, ge=1, description="Boundary label")
    position: Point2

    model_config = {
        "frozen": True,
        "json_schema_extra": {
            "example": {
                "id": "i1",
                "kind": "interior",
                "label": None,
                "position": {"x2": 6, "y2": 1},
            }
        },
    }

    @model_validator(mode="after")
    def _check_kind(self) -> "WebVertex":
        if self.kind == VertexKind.BOUNDARY:
            if self.label is None or self.id != f"b{self.label}":
                raise ValueError(f"boundary vertex {self.id} needs a matching label")
            if self.position.key() != (2 * self.label, 0):
                raise ValueError(f"boundary vertex {self.id} must sit at x2=2*label, y2=0")
        else:
            if self.label is not None or not self.id.startswith("i"):
                raise ValueError(f"interior vertex {self.id} cannot carry a label")
            if self.position.y2 <= 0:
                raise ValueError(f"interior vertex {self.id} must lie above the boundary")
        return self


class EdgeFlag(str, Enum):
    """Edge marker: "-" for a directed edge, "u" for an orientation-free one."""

    DIRECTED = "-"
    UNDIRECTED = "u"


class ArcProvenance(BaseModel):
    """An arc that runs over an edge, and whether it runs tail to head."""

    arc: Arc
    color: int = Field(..., ge=1)
    forward: bool = Field(..., description="Arc traversal agrees with tail to head")

    model_config = {"frozen": True}

    def key(self) -> Tuple[int, int, int, bool]:
        return (self.color, self.arc.i, self.arc.j, self.forward)


class WebEdge(BaseModel):
    """
    A weighted edge of a web graph.

    Attributes:
        tail: token of the tail vertex
        head: token of the head vertex
        weight: weight in 1..n-1
        flag: directed, or undirected under the sl4 convention
        provenance: the arcs that run over the edge
        path: polyline from tail to head used for drawing and rotation
    """

    tail: str
    head: str
    weight: int = Field(..., ge=1)
    flag: EdgeFlag = EdgeFlag.DIRECTED
    provenance: Tuple[ArcProvenance, ...] = Field(default=(), max_length=2)
    path: Tuple[Point2, ...] = ()

    model_config = {
        "frozen": True,
        "json_schema_extra": {
            "example": {
                "tail": "i7",
                "head": "i9",
                "weight": 2,
                "flag": "-",
                "provenance": [{"arc": {"i": 3, "j": 7}, "color": 2, "forward": True}],
                "path": [{"x2": 7, "y2": 2}, {"x2": 10, "y2": 4}, {"x2": 13, "y2": 2}],
            }
        },
    }

    @model_validator(mode="after")
    def _check_endpoints(self) -> "WebEdge":
        if self.tail == self.head:
            raise ValueError(f"edge {self.tail}-{self.head} is a loop")
        if self.path and len(self.path) < 2:
            raise ValueError("an edge path needs at least two points")
        return self

    @property
    def key(self) -> Tuple[str, str]:
        """Unordered endpoint pair, in token order."""
        return tuple(sorted((self.tail, self.head), key=token_key))  # type: ignore[return-value]

    @property
    def edge_id(self) -> str:
        return "-".join(self.key)

    @property
    def directed(self) -> bool:
        return self.flag == EdgeFlag.DIRECTED


def token_key(token: str) -> Tuple[int, int]:
    """Sort key for vertex tokens: boundary before interior, numeric within each."""
    return (0 if token[0] == "b" else 1, int(token[1:]))


class WebGraph(BaseModel):
    """
    A planar directed web graph with weights in 1..n-1 and labeled boundary.

    Boundary vertices b1..bN sit on the baseline; interior vertices lie above
    it. Vertices are stored boundary first, then interior by id; edges are
    sorted by (tail, head, weight).
    """

    n: int = Field(..., ge=2)
    N: int = Field(..., ge=1)
    vertices: Tuple[WebVertex, ...]
    edges: Tuple[WebEdge, ...]

    model_config = {"frozen": True}

    @model_validator(mode="after")
    def _check_graph(self) -> "WebGraph":
        ids = [v.id for v in self.vertices]
        if len(ids) != len(set(ids)):
            raise ValueError("vertex ids are not unique")
        positions = [v.position.key() for v in self.vertices]
        if len(positions) != len(set(positions)):
            raise ValueError("two vertices share a position")
        boundary = sorted(v.label for v in self.vertices if v.label is not None)
        if boundary != list(range(1, self.N + 1)):
            raise ValueError(f"boundary vertices must be b1..b{self.N}")

        known = set(ids)
        for edge in self.edges:
            if edge.tail not in known or edge.head not in known:
                raise ValueError(f"edge {edge.edge_id} has an unknown endpoint")
            if edge.weight > self.n - 1:
                raise ValueError(f"edge {edge.edge_id} weight {edge.weight} exceeds {self.n - 1}")
            if not edge.directed and 2 * edge.weight != self.n:
                raise ValueError(f"undirected edge {edge.edge_id} must have weight n/2")
        return self

    def interior_vertices(self) -> Tuple[WebVertex, ...]:
        return tuple(v for v in self.vertices if v.kind == VertexKind.INTERIOR)


class FlowCheck(BaseModel):
    """Flow conservation result; names the first interior vertex that fails."""

    ok: bool
    vertex: Optional[str] = None
    balance: Optional[int] = Field(None, description="In-weight minus out-weight")


class EqualityMode(str, Enum):
    UNDIRECTED_UNWEIGHTED = "undirected-unweighted"
    EXACT = "exact"


class EqualityCheck(BaseModel):
    """Result of comparing two webs; witness describes the first difference."""

    equal: bool
    witness: Optional[str] = None


class PlanarityReport(BaseModel):
    """Face count of the derived rotation system and the Euler check."""

    vertices: int
    edges: int
    faces: int = Field(..., description="Faces traced from the rotation system")
    components: int
    ok: bool
    reason: Optional[str] = None


class WebInvariantReport(BaseModel):
    """All invariant failures of one web; empty when the web is valid."""

    ok: bool
    failures: Tuple[str, ...] = ()


class FlipRequest(BaseModel):
    """A web and the ids of the edges to flip."""

    web: WebGraph = Field(..., description="Web to modify")
    edges: List[str] = Field(..., description="Edge ids such as 'i3-i7' or 'b2-i1'")

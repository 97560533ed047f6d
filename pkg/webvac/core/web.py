"""
sl_n web graphs

This module builds web graphs from standard rectangular matchings, puts their
boundary into standard form, reflects them, flips edges, and checks the web
invariants: vertex degrees, flow conservation mod n and planarity of the
rotation system derived from the stored geometry.
"""

import functools
import logging
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple, Union

import networkx as nx

from webvac.core.arrangement import arrangement_from_ncm
from webvac.core.errors import InputError, InternalCheckError, UnknownEdge
from webvac.models.matching import Arc, MulticoloredNCM
from webvac.models.web import (
    ArcEventKind,
    ArcProvenance,
    Arrangement,
    EdgeFlag,
    EqualityCheck,
    FlowCheck,
    PlanarityReport,
    Point2,
    VertexKind,
    WebEdge,
    WebGraph,
    WebInvariantReport,
    WebVertex,
    token_key,
)

logger = logging.getLogger(__name__)

EdgeKey = Tuple[str, str]
EdgeRef = Union[str, EdgeKey]


def boundary_token(label: int) -> str:
    return f"b{label}"


def interior_token(vertex_id: int) -> str:
    return f"i{vertex_id}"


def is_boundary_token(token: str) -> bool:
    return token.startswith("b")


def boundary_vertex(label: int) -> WebVertex:
    return WebVertex(
        id=boundary_token(label),
        kind=VertexKind.BOUNDARY,
        label=label,
        position=Point2(x2=2 * label, y2=0),
    )


def canonical_position_key(position: Point2) -> Tuple[int, int, int, int]:
    """
    Sort key that numbers interior vertices from their positions alone.

    Y vertices (odd x2 - y2, y2 = 1) come first by x2. Dumbbells follow by the
    crossing point; the top vertex (one unit above the crossing, odd parity)
    comes before the bottom vertex (on the crossing, even parity).
    """
    if (position.x2 - position.y2) % 2 == 0:
        return (1, position.x2, position.y2, 1)
    if position.y2 == 1:
        return (0, position.x2, 0, 0)
    return (1, position.x2, position.y2 - 1, 0)


def sort_edges(edges: Iterable[WebEdge]) -> Tuple[WebEdge, ...]:
    return tuple(sorted(edges, key=lambda e: (token_key(e.tail), token_key(e.head), e.weight)))


def _sorted_provenance(provenance: Iterable[ArcProvenance]) -> Tuple[ArcProvenance, ...]:
    return tuple(sorted(provenance, key=ArcProvenance.key))


def _reversed_provenance(provenance: Iterable[ArcProvenance]) -> Tuple[ArcProvenance, ...]:
    return _sorted_provenance(
        ArcProvenance(arc=p.arc, color=p.color, forward=not p.forward) for p in provenance
    )


def _swap(edge: WebEdge, weight: int) -> WebEdge:
    return WebEdge(
        tail=edge.head,
        head=edge.tail,
        weight=weight,
        flag=edge.flag,
        provenance=_reversed_provenance(edge.provenance),
        path=tuple(reversed(edge.path)),
    )


def _normalize(edge: WebEdge) -> WebEdge:
    """Store an undirected edge with its endpoints in token order."""
    if edge.directed or token_key(edge.tail) <= token_key(edge.head):
        return edge
    return _swap(edge, edge.weight)


def flip_edge(edge: WebEdge, n: int) -> WebEdge:
    """Reverse an edge and replace its weight w by n - w."""
    return _normalize(_swap(edge, n - edge.weight))


def mark_undirected(edge: WebEdge, n: int) -> WebEdge:
    """
    Mark an edge of weight n/2 as orientation-free.

    Raises:
        InputError: If 2 * weight != n
    """
    if 2 * edge.weight != n:
        raise InputError(f"only weight {n}/2 edges can be undirected, {edge.edge_id} has {edge.weight}")
    return _normalize(edge.model_copy(update={"flag": EdgeFlag.UNDIRECTED}))


def _undirected(vertices: Sequence[WebVertex], edges: Sequence[WebEdge]) -> nx.Graph:
    graph = nx.Graph()
    graph.add_nodes_from(v.id for v in vertices)
    graph.add_edges_from((e.tail, e.head) for e in edges)
    return graph


def _connected_to_boundary(vertices: Sequence[WebVertex], edges: Sequence[WebEdge]) -> bool:
    graph = _undirected(vertices, edges)
    return all(
        any(is_boundary_token(token) for token in component)
        for component in nx.connected_components(graph)
    )


def web_from_ncm(m: MulticoloredNCM) -> WebGraph:
    """
    Build the web graph of a standard rectangular matching.

    Every shared boundary point becomes a boundary stub of weight 1 into a Y
    vertex where the two arcs meet. Every crossing becomes a dumbbell: a top
    vertex on the segments toward i and j', a bottom vertex on the segments
    toward i' and j, and a vertical edge between them. The pieces of an arc
    between consecutive vertices become edges directed along the arc with the
    arc's color as weight. Edges that two arcs run over follow the arc of
    higher color and carry the color difference.

    Args:
        m: standard rectangular matching

    Returns:
        WebGraph: the web before boundary standardization

    Raises:
        NotStandardRectangular: If m does not come from a rectangular tableau
        DegenerateArrangement: If the arrangement has coinciding features
    """
    arrangement = arrangement_from_ncm(m)
    return _web_from_arrangement(arrangement)


def _web_from_arrangement(arrangement: Arrangement) -> WebGraph:
    vertices = [boundary_vertex(label) for label in range(1, arrangement.N + 1)]
    positions: Dict[str, Point2] = {v.id: v.position for v in vertices}

    def add_interior(position: Point2) -> str:
        token = interior_token(len(vertices) - arrangement.N + 1)
        vertices.append(
            WebVertex(id=token, kind=VertexKind.INTERIOR, position=position)
        )
        positions[token] = position
        return token

    y_vertex = {p: add_interior(Point2(x2=2 * p, y2=1)) for p in arrangement.shared_points}
    top: Dict[int, str] = {}
    bottom: Dict[int, str] = {}
    for idx, crossing in enumerate(arrangement.crossings):
        point = crossing.point
        top[idx] = add_interior(Point2(x2=point.x2, y2=point.y2 + 1))
        bottom[idx] = add_interior(point)

    def endpoint(label: int, shared: bool) -> str:
        return y_vertex[label] if shared else boundary_token(label)

    edges: List[WebEdge] = []
    for trav in arrangement.traversals:
        current: Optional[str] = endpoint(trav.arc.i, trav.events[0].shared)
        bends: List[Point2] = []
        for event in trav.events[1:]:
            if event.kind == ArcEventKind.APEX:
                bends.append(event.point)
                continue
            if event.kind == ArcEventKind.ASCENDING_CROSSING:
                arrive, depart = bottom[event.crossing], top[event.crossing]  # type: ignore[index]
            elif event.kind == ArcEventKind.DESCENDING_CROSSING:
                arrive, depart = top[event.crossing], bottom[event.crossing]  # type: ignore[index]
            else:
                arrive, depart = endpoint(trav.arc.j, event.shared), None
            assert current is not None
            edges.append(
                WebEdge(
                    tail=current,
                    head=arrive,
                    weight=trav.color,
                    provenance=(ArcProvenance(arc=trav.arc, color=trav.color, forward=True),),
                    path=(positions[current], *bends, positions[arrive]),
                )
            )
            current, bends = depart, []

    def two_arc_edge(
        up: Tuple[str, Arc, int], down: Tuple[str, Arc, int]
    ) -> WebEdge:
        # up runs from its vertex to the other one; down runs the opposite way
        (low_end, up_arc, up_color), (high_end, down_arc, down_color) = up, down
        if up_color > down_color:
            tail, head, weight = low_end, high_end, up_color - down_color
        else:
            tail, head, weight = high_end, low_end, down_color - up_color
        forward_up = tail == low_end
        return WebEdge(
            tail=tail,
            head=head,
            weight=weight,
            provenance=_sorted_provenance(
                [
                    ArcProvenance(arc=up_arc, color=up_color, forward=forward_up),
                    ArcProvenance(arc=down_arc, color=down_color, forward=not forward_up),
                ]
            ),
            path=(positions[tail], positions[head]),
        )

    starting = {t.arc.i: t for t in arrangement.traversals}
    ending = {t.arc.j: t for t in arrangement.traversals}
    for p, token in y_vertex.items():
        out, into = starting[p], ending[p]
        edges.append(
            two_arc_edge(
                (boundary_token(p), out.arc, out.color),
                (token, into.arc, into.color),
            )
        )
    for idx, crossing in enumerate(arrangement.crossings):
        edges.append(
            two_arc_edge(
                (bottom[idx], crossing.upper.arc, crossing.upper.color),
                (top[idx], crossing.lower.arc, crossing.lower.color),
            )
        )

    if not _connected_to_boundary(vertices, edges):
        raise InternalCheckError("web has a component that does not touch the boundary")

    logger.debug(
        f"Built web with {len(vertices) - arrangement.N} interior vertices and {len(edges)} edges"
    )
    return WebGraph(n=arrangement.n, N=arrangement.N, vertices=tuple(vertices), edges=sort_edges(edges))


def standardize_boundary(w: WebGraph) -> WebGraph:
    """
    Direct every boundary edge out of the boundary with weight 1.

    Edges from an interior vertex into a boundary vertex (they end an arc of
    color n - 1) are flipped. Edges joining two boundary vertices only occur
    for n = 2, where a flip keeps the weight 1; they are marked undirected.
    """
    edges = []
    for edge in w.edges:
        if is_boundary_token(edge.tail) and is_boundary_token(edge.head):
            edge = mark_undirected(edge, w.n)
        elif is_boundary_token(edge.head):
            edge = flip_edge(edge, w.n)
        edges.append(edge)
    return w.model_copy(update={"edges": sort_edges(edges)})


def parse_edge_id(edge_id: str) -> EdgeKey:
    """
    Parse an edge id "u-v" into its endpoint pair in token order.

    Raises:
        UnknownEdge: If the id is not two vertex tokens joined by "-"
    """
    parts = edge_id.strip().split("-")
    if len(parts) != 2 or not all(
        len(p) > 1 and p[0] in "bi" and p[1:].isdigit() for p in parts
    ):
        raise UnknownEdge(f"malformed edge id {edge_id!r}")
    return tuple(sorted(parts, key=token_key))  # type: ignore[return-value]


def _edge_key(ref: EdgeRef) -> EdgeKey:
    if isinstance(ref, str):
        return parse_edge_id(ref)
    return tuple(sorted(ref, key=token_key))  # type: ignore[return-value]


def flip_edges(w: WebGraph, edges: Iterable[EdgeRef]) -> WebGraph:
    """
    Flip a set of edges of a web.

    Args:
        w: web to modify
        edges: edge ids ("i3-i7") or endpoint pairs; duplicates count once

    Returns:
        WebGraph: the web with every listed edge reversed and reweighted n - w

    Raises:
        UnknownEdge: If an id does not name an edge of w
    """
    keys = {_edge_key(ref) for ref in edges}
    present = {e.key for e in w.edges}
    missing = sorted(keys - present)
    if missing:
        raise UnknownEdge(f"web has no edge {'-'.join(missing[0])}")

    flipped = [flip_edge(e, w.n) if e.key in keys else e for e in w.edges]
    return w.model_copy(update={"edges": sort_edges(flipped)})


def reflection_vertex_map(w: WebGraph) -> Dict[str, str]:
    """
    Map every vertex token of w to its token in reflect_web(w).

    Boundary b_p goes to b_{N+1-p}; interior vertices are renumbered in the
    canonical order of their mirrored positions.
    """
    mapping = {
        boundary_token(label): boundary_token(w.N + 1 - label) for label in range(1, w.N + 1)
    }
    mirrored = sorted(
        ((_mirror(v.position, w.N), v.id) for v in w.interior_vertices()),
        key=lambda pv: canonical_position_key(pv[0]),
    )
    for new_id, (_, old) in enumerate(mirrored, start=1):
        mapping[old] = interior_token(new_id)
    return mapping


def _mirror(point: Point2, N: int) -> Point2:
    return Point2(x2=2 * (N + 1) - point.x2, y2=point.y2)


def _mirror_arc(arc: Arc, N: int) -> Arc:
    return Arc(i=N + 1 - arc.j, j=N + 1 - arc.i)


def map_edge_keys(keys: Iterable[EdgeKey], mapping: Dict[str, str]) -> FrozenSet[EdgeKey]:
    """Image of a set of edge keys under a vertex map."""
    return frozenset(_edge_key((mapping[u], mapping[v])) for u, v in keys)


def reflect_web(w: WebGraph) -> WebGraph:
    """
    Reflect a web over the vertical line x = (N+1)/2.

    Positions and edge paths are mirrored, boundary labels p become N+1-p and
    interior vertices are renumbered canonically. Edge directions and weights
    are kept; provenance arcs are mirrored with color x becoming n - x, and
    since mirroring reverses every arc they now run against the edge.

    Args:
        w: web to reflect

    Returns:
        WebGraph: the reflected web
    """
    mapping = reflection_vertex_map(w)
    vertices = [boundary_vertex(label) for label in range(1, w.N + 1)]
    interior = sorted(
        (
            WebVertex(id=mapping[v.id], kind=VertexKind.INTERIOR, position=_mirror(v.position, w.N))
            for v in w.interior_vertices()
        ),
        key=lambda v: token_key(v.id),
    )
    vertices.extend(interior)

    edges = [
        _normalize(
            WebEdge(
                tail=mapping[e.tail],
                head=mapping[e.head],
                weight=e.weight,
                flag=e.flag,
                provenance=_sorted_provenance(
                    ArcProvenance(
                        arc=_mirror_arc(p.arc, w.N), color=w.n - p.color, forward=not p.forward
                    )
                    for p in e.provenance
                ),
                path=tuple(_mirror(p, w.N) for p in e.path),
            )
        )
        for e in w.edges
    ]
    return WebGraph(n=w.n, N=w.N, vertices=tuple(vertices), edges=sort_edges(edges))


def single_arc_interior_edges(w: WebGraph) -> FrozenSet[EdgeKey]:
    """
    Keys of the edges joining two interior vertices that exactly one arc runs over.

    Raises:
        InputError: If w carries no provenance at all
    """
    if w.edges and not any(e.provenance for e in w.edges):
        raise InputError("web carries no provenance")
    return frozenset(
        e.key
        for e in w.edges
        if not is_boundary_token(e.tail)
        and not is_boundary_token(e.head)
        and len(e.provenance) == 1
    )


def check_flow(w: WebGraph) -> FlowCheck:
    """
    Check that in-weight minus out-weight vanishes mod n at every interior vertex.

    Returns:
        FlowCheck: the first failing vertex in id order, if any
    """
    balance = {v.id: 0 for v in w.interior_vertices()}
    for edge in w.edges:
        if edge.head in balance:
            balance[edge.head] += edge.weight
        if edge.tail in balance:
            balance[edge.tail] -= edge.weight

    for token in sorted(balance, key=token_key):
        if balance[token] % w.n:
            return FlowCheck(ok=False, vertex=token, balance=balance[token])
    return FlowCheck(ok=True)


def degrees(w: WebGraph) -> Dict[str, int]:
    counts = {v.id: 0 for v in w.vertices}
    for edge in w.edges:
        counts[edge.tail] += 1
        counts[edge.head] += 1
    return counts


def _half_plane(vector: Tuple[int, int]) -> int:
    dx, dy = vector
    return 0 if dy > 0 or (dy == 0 and dx > 0) else 1


def _counterclockwise(a: Tuple[int, int], b: Tuple[int, int]) -> int:
    ha, hb = _half_plane(a), _half_plane(b)
    if ha != hb:
        return ha - hb
    cross = a[0] * b[1] - a[1] * b[0]
    return -1 if cross > 0 else (1 if cross < 0 else 0)


def _edge_points(edge: WebEdge, positions: Dict[str, Point2]) -> Tuple[Point2, ...]:
    return edge.path or (positions[edge.tail], positions[edge.head])


def rotation_system(w: WebGraph) -> Dict[str, List[Tuple[int, str]]]:
    """
    Counterclockwise order of the edge-ends at every vertex.

    The direction of an edge-end is the first segment of the edge's path leaving
    the vertex; angles are compared exactly with integer cross products,
    starting from the positive x axis.

    Returns:
        Dict[str, List[Tuple[int, str]]]: vertex token to (edge index, neighbor) pairs
    """
    positions = {v.id: v.position for v in w.vertices}
    ends: Dict[str, List[Tuple[Tuple[int, int], int, str]]] = {v.id: [] for v in w.vertices}
    for idx, edge in enumerate(w.edges):
        points = _edge_points(edge, positions)
        out = (points[1].x2 - points[0].x2, points[1].y2 - points[0].y2)
        back = (points[-2].x2 - points[-1].x2, points[-2].y2 - points[-1].y2)
        ends[edge.tail].append((out, idx, edge.head))
        ends[edge.head].append((back, idx, edge.tail))

    order = functools.cmp_to_key(_counterclockwise)
    return {
        token: [(idx, other) for _, idx, other in sorted(items, key=lambda item: order(item[0]))]
        for token, items in ends.items()
    }


def planarity_report(w: WebGraph) -> PlanarityReport:
    """
    Trace the faces of the derived rotation system and check Euler's formula.

    The outer faces of all components are counted as one face, so a plane
    embedding satisfies V - E + F = 1 + C.
    """
    n_vertices, n_edges = len(w.vertices), len(w.edges)
    keys = [e.key for e in w.edges]
    if len(keys) != len(set(keys)):
        return PlanarityReport(
            vertices=n_vertices, edges=n_edges, faces=0, components=0, ok=False,
            reason="web has parallel edges",
        )

    rotation = rotation_system(w)
    embedding = nx.PlanarEmbedding()
    embedding.add_nodes_from(rotation)
    embedding.set_data({v: [other for _, other in reversed(ends)] for v, ends in rotation.items() if ends})
    components = nx.number_connected_components(_undirected(w.vertices, w.edges))

    traced = 0
    visited: set = set()
    try:
        for v in embedding:
            for other in embedding.neighbors_cw_order(v):
                if (v, other) not in visited:
                    embedding.traverse_face(v, other, mark_half_edges=visited)
                    traced += 1
    except nx.NetworkXException as e:
        return PlanarityReport(
            vertices=n_vertices, edges=n_edges, faces=traced, components=components, ok=False,
            reason=str(e),
        )

    faces = traced - (components - 1)
    ok = n_vertices - n_edges + faces == 1 + components
    return PlanarityReport(
        vertices=n_vertices, edges=n_edges, faces=faces, components=components, ok=ok,
        reason=None if ok else f"V - E + F = {n_vertices - n_edges + faces}, expected {1 + components}",
    )


def boundary_weights(w: WebGraph) -> Tuple[Tuple[int, bool], ...]:
    """Weight of every boundary edge, left to right, and whether it points outward."""
    by_label: Dict[str, Tuple[int, bool]] = {}
    for edge in w.edges:
        for token in (edge.tail, edge.head):
            if is_boundary_token(token):
                by_label[token] = (edge.weight, edge.tail == token or not edge.directed)
    return tuple(by_label[boundary_token(label)] for label in range(1, w.N + 1))


def check_web_invariants(w: WebGraph, arrangement: Optional[Arrangement] = None) -> WebInvariantReport:
    """
    Collect every web invariant failure of w.

    Checks vertex degrees, flow, planarity and, when the arrangement w was built
    from is given, the interior vertex and edge counts it predicts.
    """
    failures = []
    for token, degree in degrees(w).items():
        expected = 1 if is_boundary_token(token) else 3
        if degree != expected:
            failures.append(f"vertex {token} has degree {degree}, expected {expected}")

    flow = check_flow(w)
    if not flow.ok:
        failures.append(f"flow at {flow.vertex} is {flow.balance}, not 0 mod {w.n}")

    planarity = planarity_report(w)
    if not planarity.ok:
        failures.append(f"planarity: {planarity.reason}")

    if arrangement is not None:
        interior = len(w.interior_vertices())
        expected = 2 * len(arrangement.crossings) + len(arrangement.shared_points)
        if interior != expected:
            failures.append(f"{interior} interior vertices, expected {expected}")
        if 2 * len(w.edges) != 3 * interior + w.N:
            failures.append(f"{len(w.edges)} edges, expected {(3 * interior + w.N) // 2}")

    return WebInvariantReport(ok=not failures, failures=tuple(failures))


def web_equal_positioned(a: WebGraph, b: WebGraph) -> EqualityCheck:
    """
    Compare two webs vertex by vertex at equal positions.

    Edges are compared by endpoint positions, weight and flag; undirected edges
    ignore their stored orientation.
    """
    pos_a = {v.id: v.position.key() for v in a.vertices}
    pos_b = {v.id: v.position.key() for v in b.vertices}
    only = sorted(set(pos_a.values()) ^ set(pos_b.values()))
    if only:
        return EqualityCheck(equal=False, witness=f"no vertex at {only[0]} in one of the webs")

    def signatures(w: WebGraph, pos: Dict[str, Tuple[int, int]]) -> List[Tuple]:
        out = []
        for e in w.edges:
            ends = (pos[e.tail], pos[e.head])
            if not e.directed:
                ends = tuple(sorted(ends))  # type: ignore[assignment]
            out.append((ends, e.weight, e.flag.value))
        return sorted(out)

    sig_a, sig_b = signatures(a, pos_a), signatures(b, pos_b)
    for left, right in zip(sig_a, sig_b):
        if left != right:
            return EqualityCheck(equal=False, witness=f"edge {left} differs from {right}")
    if len(sig_a) != len(sig_b):
        return EqualityCheck(equal=False, witness=f"{len(sig_a)} edges against {len(sig_b)}")
    return EqualityCheck(equal=True)

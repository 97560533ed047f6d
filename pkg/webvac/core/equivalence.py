"""
Boundary-anchored web equality and the sl3/sl4 conventions

Two webs are equal when some bijection of their vertices fixes every boundary
label and carries edges onto edges. Interior vertices carry no anchor, so the
search is an anchored graph isomorphism, delegated to networkx's VF2 matcher
with a node_match on the boundary label.
"""

import logging
from typing import Dict, Optional

import networkx as nx
from networkx.algorithms import isomorphism

from webvac.core.errors import ConventionUnreachable, InputError, MismatchedBoundary
from webvac.core.web import flip_edge, is_boundary_token, mark_undirected, sort_edges
from webvac.models.web import (
    EqualityCheck,
    EqualityMode,
    VertexKind,
    WebEdge,
    WebGraph,
    token_key,
)

logger = logging.getLogger(__name__)

_node_match = isomorphism.categorical_node_match("anchor", None)


def _add_vertices(graph: nx.Graph, w: WebGraph) -> None:
    for v in w.vertices:
        graph.add_node(v.id, anchor=v.label if v.kind == VertexKind.BOUNDARY else None)


def _undirected_graph(w: WebGraph) -> nx.MultiGraph:
    graph = nx.MultiGraph()
    _add_vertices(graph, w)
    graph.add_edges_from((e.tail, e.head) for e in w.edges)
    return graph


def _directed_graph(w: WebGraph) -> nx.MultiDiGraph:
    graph = nx.MultiDiGraph()
    _add_vertices(graph, w)
    for e in w.edges:
        graph.add_edge(e.tail, e.head, signature=(e.weight, e.flag.value))
        if not e.directed:
            graph.add_edge(e.head, e.tail, signature=(e.weight, e.flag.value))
    return graph


def _edge_match(a: Dict, b: Dict) -> bool:
    return sorted(d["signature"] for d in a.values()) == sorted(d["signature"] for d in b.values())


def _describe(e: WebEdge) -> str:
    return f"{e.tail}->{e.head} w{e.weight} {e.flag.value}"


def _exact_witness(a: WebGraph, b: WebGraph, mapping: Dict[str, str]) -> str:
    """First edge of a, in sorted order, whose image in b differs."""
    image = {}
    for e in b.edges:
        image.setdefault(e.key, []).append(e)
    for e in a.edges:
        u, v = mapping[e.tail], mapping[e.head]
        key = tuple(sorted((u, v), key=token_key))
        candidates = image.get(key, [])
        for other in candidates:
            same_direction = (other.tail, other.head) == (u, v) or not e.directed
            if other.weight == e.weight and other.flag == e.flag and same_direction:
                break
        else:
            found = ", ".join(_describe(o) for o in candidates) or "nothing"
            return f"edge {_describe(e)} maps to {found}"
    return "no direction-preserving anchored isomorphism"


def web_equal_anchored(a: WebGraph, b: WebGraph, mode: EqualityMode) -> EqualityCheck:
    """
    Decide whether two webs agree up to a relabeling of interior vertices.

    Args:
        a: first web
        b: second web
        mode: UNDIRECTED_UNWEIGHTED compares incidence only; EXACT also compares
            edge directions, weights and flags, with undirected edges matching
            either orientation

    Returns:
        EqualityCheck: equal flag and, when unequal, the first difference found

    Raises:
        MismatchedBoundary: If the webs have different n or N
    """
    if a.n != b.n or a.N != b.N:
        raise MismatchedBoundary(f"cannot compare sl_{a.n} web on {a.N} points with sl_{b.n} web on {b.N} points")

    if len(a.vertices) != len(b.vertices) or len(a.edges) != len(b.edges):
        return EqualityCheck(
            equal=False,
            witness=f"{len(a.vertices)} vertices and {len(a.edges)} edges against {len(b.vertices)} and {len(b.edges)}",
        )

    undirected = isomorphism.MultiGraphMatcher(
        _undirected_graph(a), _undirected_graph(b), node_match=_node_match
    )
    if mode == EqualityMode.UNDIRECTED_UNWEIGHTED:
        if undirected.is_isomorphic():
            return EqualityCheck(equal=True)
        return EqualityCheck(equal=False, witness="no boundary-fixing isomorphism of the undirected graphs")

    exact = isomorphism.MultiDiGraphMatcher(
        _directed_graph(a), _directed_graph(b), node_match=_node_match, edge_match=_edge_match
    )
    if exact.is_isomorphic():
        return EqualityCheck(equal=True)

    mapping: Optional[Dict[str, str]] = next(undirected.isomorphisms_iter(), None)
    if mapping is None:
        return EqualityCheck(equal=False, witness="no boundary-fixing isomorphism of the undirected graphs")
    return EqualityCheck(equal=False, witness=_exact_witness(a, b, mapping))


def _convention_violation(w: WebGraph) -> Optional[str]:
    for e in w.edges:
        if is_boundary_token(e.head) and e.directed:
            return f"boundary edge {e.edge_id} points into the boundary"
        if (is_boundary_token(e.tail) or is_boundary_token(e.head)) and e.weight != 1:
            return f"boundary edge {e.edge_id} has weight {e.weight}"

    incoming: Dict[str, int] = {v.id: 0 for v in w.interior_vertices()}
    outgoing: Dict[str, int] = dict(incoming)
    for e in w.edges:
        if e.weight != 1:
            continue
        if e.tail in outgoing:
            outgoing[e.tail] += 1
        if e.head in incoming:
            incoming[e.head] += 1
    for token in sorted(incoming, key=token_key):
        if incoming[token] and outgoing[token]:
            return f"vertex {token} is neither a source nor a sink"
    return None


def apply_convention_34(w: WebGraph) -> WebGraph:
    """
    Rewrite an sl3 or sl4 web into the customary form by edge flips.

    For n = 3 every weight-2 edge is flipped, leaving only weight 1. For n = 4
    weight-3 edges are flipped to weight 1 and weight-2 edges are marked
    undirected. Afterwards every boundary edge must point outward with weight 1
    and every interior vertex must be a source or a sink of its weight-1 edges.

    Raises:
        InputError: If n is not 3 or 4
        ConventionUnreachable: If the flipped web still violates the convention
    """
    if w.n not in (3, 4):
        raise InputError(f"conventions are defined for n = 3 and n = 4, not n = {w.n}")

    edges = []
    for e in w.edges:
        if e.weight == w.n - 1 and e.weight > 1:
            e = flip_edge(e, w.n)
        elif w.n == 4 and e.weight == 2 and e.directed:
            e = mark_undirected(e, w.n)
        edges.append(e)

    result = w.model_copy(update={"edges": sort_edges(edges)})
    violation = _convention_violation(result)
    if violation is not None:
        raise ConventionUnreachable(violation)
    return result

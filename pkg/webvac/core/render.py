"""
SVG and TikZ rendering of matchings and webs

Matchings are drawn as a labeled baseline with one colored semicircle per arc.
Webs are drawn from their stored doubled coordinates: every edge follows its
path, directed edges get an arrowhead, and weights are written next to the
middle of the edge. Output depends only on the object and the RenderSpec, so
identical inputs give byte-identical documents.
"""

import logging
from typing import List, Tuple, Union
from xml.etree import ElementTree as ET

from webvac.core.errors import UnsupportedKind
from webvac.models.matching import MulticoloredNCM
from webvac.models.render import RenderFormat, RenderKind, RenderSpec
from webvac.models.web import Point2, WebEdge, WebGraph

logger = logging.getLogger(__name__)

SVG_NS = "http://www.w3.org/2000/svg"
UNIT = 40.0
EDGE_GRAY = "gray"

Renderable = Union[MulticoloredNCM, WebGraph]


def _num(x: float, prec: int = 4) -> str:
    value = round(x, prec)
    if value == int(value):
        return str(int(value))
    return f"{value:g}"


class _Canvas:
    """Maps doubled coordinates to SVG user units (y grows downward)."""

    def __init__(self, N: int, top_y2: int, scale: float):
        self.unit = UNIT * scale
        self.width = (N + 1) * self.unit
        self.base = self.unit + max(top_y2, 1) / 2 * self.unit
        self.height = self.base + self.unit

    def x(self, x2: int) -> str:
        return _num(x2 / 2 * self.unit)

    def y(self, y2: int) -> str:
        return _num(self.base - y2 / 2 * self.unit)

    def root(self) -> ET.Element:
        return ET.Element(
            "svg",
            xmlns=SVG_NS,
            width=_num(self.width),
            height=_num(self.height),
            viewBox=f"0 0 {_num(self.width)} {_num(self.height)}",
        )

    def baseline(self, svg: ET.Element, N: int) -> None:
        ET.SubElement(
            svg, "line", {"class": "baseline", "x1": self.x(1), "y1": self.y(0),
                          "x2": self.x(2 * N + 1), "y2": self.y(0), "stroke": "black"},
        )
        for label in range(1, N + 1):
            text = ET.SubElement(
                svg, "text", {"class": "label", "x": self.x(2 * label),
                              "y": _num(self.base + self.unit / 2), "text-anchor": "middle",
                              "font-size": _num(self.unit / 3)},
            )
            text.text = str(label)


def _document(svg: ET.Element) -> str:
    return ET.tostring(svg, encoding="unicode") + "\n"


def _ncm_svg(m: MulticoloredNCM, spec: RenderSpec) -> str:
    top = max(arc.j - arc.i for _, arc in m.colored_arcs())
    canvas = _Canvas(m.N, top, spec.scale)
    svg = canvas.root()
    canvas.baseline(svg, m.N)
    for color, arc in m.colored_arcs():
        radius = _num((arc.j - arc.i) / 2 * canvas.unit)
        ET.SubElement(
            svg, "path",
            {
                "class": f"arc color-{color}",
                "d": f"M {canvas.x(2 * arc.i)} {canvas.y(0)} A {radius} {radius} 0 0 1 "
                     f"{canvas.x(2 * arc.j)} {canvas.y(0)}",
                "stroke": spec.color_for(color),
                "stroke-width": "2",
                "fill": "none",
            },
        )
    return _document(svg)


def _edge_color(edge: WebEdge, spec: RenderSpec) -> str:
    if len(edge.provenance) == 1:
        return spec.color_for(edge.provenance[0].color)
    if edge.provenance:
        return EDGE_GRAY
    return "black"


def _edge_points(w: WebGraph, edge: WebEdge) -> Tuple[Point2, ...]:
    if edge.path:
        return edge.path
    positions = {v.id: v.position for v in w.vertices}
    return (positions[edge.tail], positions[edge.head])


def _label_point(points: Tuple[Point2, ...]) -> Tuple[float, float]:
    """Midpoint of the middle segment of a polyline, in doubled coordinates."""
    a = points[(len(points) - 1) // 2]
    b = points[(len(points) - 1) // 2 + 1]
    return ((a.x2 + b.x2) / 2, (a.y2 + b.y2) / 2)


def _web_svg(w: WebGraph, spec: RenderSpec) -> str:
    top = max(p.y2 for e in w.edges for p in _edge_points(w, e))
    canvas = _Canvas(w.N, top, spec.scale)
    svg = canvas.root()

    defs = ET.SubElement(svg, "defs")
    marker = ET.SubElement(
        defs, "marker",
        {"id": "arrow", "viewBox": "0 0 10 10", "refX": "10", "refY": "5",
         "markerWidth": "6", "markerHeight": "6", "orient": "auto-start-reverse"},
    )
    ET.SubElement(marker, "path", {"d": "M 0 0 L 10 5 L 0 10 z"})
    canvas.baseline(svg, w.N)

    for edge in w.edges:
        points = _edge_points(w, edge)
        attrs = {
            "class": "edge",
            "points": " ".join(f"{canvas.x(p.x2)},{canvas.y(p.y2)}" for p in points),
            "stroke": _edge_color(edge, spec),
            "stroke-width": "2",
            "fill": "none",
        }
        if edge.directed:
            attrs["marker-mid" if len(points) > 2 else "marker-end"] = "url(#arrow)"
        ET.SubElement(svg, "polyline", attrs)

        lx, ly = _label_point(points)
        weight = ET.SubElement(
            svg, "text",
            {"class": "weight", "x": _num(lx / 2 * canvas.unit),
             "y": _num(canvas.base - ly / 2 * canvas.unit - canvas.unit / 8),
             "text-anchor": "middle", "font-size": _num(canvas.unit / 4)},
        )
        weight.text = str(edge.weight)

    for vertex in w.interior_vertices():
        ET.SubElement(
            svg, "circle",
            {"class": "vertex", "cx": canvas.x(vertex.position.x2),
             "cy": canvas.y(vertex.position.y2), "r": _num(canvas.unit / 12)},
        )
    return _document(svg)


def _tikz_point(point: Point2) -> str:
    return f"({_num(point.x2 / 2)},{_num(point.y2 / 2)})"


def _tikz_header(N: int, spec: RenderSpec, extra: str = "") -> List[str]:
    return [
        f"\\begin{{tikzpicture}}[scale={_num(spec.scale)}{extra}]",
        f"  \\draw[thick] (0.5,0) -- ({_num(N + 0.5)},0);",
        f"  \\foreach \\i in {{1,...,{N}}} \\node[below, font=\\tiny] at (\\i,0) {{\\i}};",
    ]


def _ncm_tikz(m: MulticoloredNCM, spec: RenderSpec) -> str:
    lines = _tikz_header(m.N, spec)
    lines.extend(
        f"  \\draw[{spec.color_for(color)}, thick] ({arc.i},0) to[out=90,in=90] ({arc.j},0);"
        for color, arc in m.colored_arcs()
    )
    lines.append("\\end{tikzpicture}")
    return "\n".join(lines) + "\n"


def _web_tikz(w: WebGraph, spec: RenderSpec) -> str:
    # needs \usetikzlibrary{decorations.markings}
    marked = (
        ", ->-/.style={decoration={markings, mark=at position 0.55 with {\\arrow{>}}}, "
        "postaction={decorate}}"
    )
    lines = _tikz_header(w.N, spec, marked)
    for edge in w.edges:
        points = _edge_points(w, edge)
        style = f"{_edge_color(edge, spec)}, thick" + (", ->-" if edge.directed else "")
        lines.append(f"  \\draw[{style}] " + " -- ".join(_tikz_point(p) for p in points) + ";")
        lx, ly = _label_point(points)
        lines.append(
            f"  \\node[font=\\tiny, above] at ({_num(lx / 2)},{_num(ly / 2)}) {{{edge.weight}}};"
        )
    for vertex in w.interior_vertices():
        lines.append(f"  \\filldraw {_tikz_point(vertex.position)} circle (1.5pt);")
    lines.append("\\end{tikzpicture}")
    return "\n".join(lines) + "\n"


def render(obj: Renderable, spec: RenderSpec) -> str:
    """
    Draw a matching or a web.

    Args:
        obj: MulticoloredNCM for kind ncm, WebGraph for kind web
        spec: drawing options

    Returns:
        str: the SVG or TikZ document, newline-terminated

    Raises:
        UnsupportedKind: If obj is not of the requested kind or has nothing to draw
    """
    if spec.kind == RenderKind.NCM:
        if not isinstance(obj, MulticoloredNCM):
            raise UnsupportedKind(f"cannot draw a {type(obj).__name__} as a matching")
        draw = _ncm_svg if spec.format == RenderFormat.SVG else _ncm_tikz
        return draw(obj, spec)

    if not isinstance(obj, WebGraph):
        raise UnsupportedKind(f"cannot draw a {type(obj).__name__} as a web")
    if not obj.edges:
        raise UnsupportedKind("web has no edges to draw")
    logger.debug(f"Rendering web with {len(obj.edges)} edges as {spec.format.value}")
    draw_web = _web_svg if spec.format == RenderFormat.SVG else _web_tikz
    return draw_web(obj, spec)

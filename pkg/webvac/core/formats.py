"""
Line-oriented text formats

Tableaux, matchings, webs and verification reports are written as
newline-terminated lines of single-space separated tokens with base-10
integers. Parsing is strict: anything the printers would not produce is
rejected with a FormatError naming the line.
"""

import re
from typing import Dict, List, Sequence, Union

from pydantic import ValidationError

from webvac.core.errors import FormatError
from webvac.core.tableau import validate
from webvac.core.web import boundary_vertex, interior_token, sort_edges
from webvac.models.matching import Arc, ColoredMatching, MulticoloredNCM
from webvac.models.tableau import Grid, StandardTableau
from webvac.models.verification import VerificationReport
from webvac.models.web import EdgeFlag, Point2, VertexKind, WebEdge, WebGraph, WebVertex

_INT = re.compile(r"^(0|[1-9][0-9]*)$")
_TOKEN = re.compile(r"^[bi][1-9][0-9]*$")

Parsed = Union[StandardTableau, MulticoloredNCM, WebGraph]


def _lines(text: str) -> List[List[str]]:
    if not text.endswith("\n"):
        raise FormatError("text must end with a newline")
    rows = []
    for number, line in enumerate(text[:-1].split("\n"), start=1):
        fields = line.split(" ")
        if not line or any(not f for f in fields) or line != line.strip():
            raise FormatError("blank line or stray whitespace", number)
        rows.append(fields)
    return rows


def _int(field: str, line: int) -> int:
    if not _INT.match(field):
        raise FormatError(f"{field!r} is not a base-10 integer", line)
    return int(field)


def _header(rows: List[List[str]], word: str) -> List[int]:
    if not rows or rows[0][0] != word or len(rows[0]) != 3:
        raise FormatError(f"expected header '{word} <a> <b>'", 1)
    return [_int(f, 1) for f in rows[0][1:]]


def _grid_lines(word: str, entries: Grid) -> str:
    lines = [f"{word} {len(entries)} {len(entries[0])}"]
    lines.extend(" ".join(str(v) for v in row) for row in entries)
    return "\n".join(lines) + "\n"


def format_tableau(t: StandardTableau) -> str:
    """Print a tableau as 'tableau <n> <k>' followed by its rows."""
    return _grid_lines("tableau", t.entries)


def parse_grid(text: str) -> Grid:
    """
    Parse the tableau layout without checking standardness.

    Raises:
        FormatError: If the text does not follow the layout
    """
    rows = _lines(text)
    n, k = _header(rows, "tableau")
    if n < 1 or k < 1:
        raise FormatError("a grid needs at least one row and one column", 1)
    if len(rows) != n + 1:
        raise FormatError(f"expected {n} rows, got {len(rows) - 1}")
    grid = []
    for number, fields in enumerate(rows[1:], start=2):
        if len(fields) != k:
            raise FormatError(f"expected {k} entries, got {len(fields)}", number)
        grid.append(tuple(_int(f, number) for f in fields))
    return tuple(grid)


def parse_tableau(text: str) -> StandardTableau:
    """
    Parse and validate a tableau.

    Raises:
        FormatError: If the text does not follow the layout
        NotBijective: If the entries are not 1..N
        NotIncreasing: If a row or column decreases
    """
    return validate(parse_grid(text))


def format_ncm(m: MulticoloredNCM) -> str:
    """Print a matching as 'ncm <n> <N>' and one 'arc <color> <i> <j>' line per arc."""
    lines = [f"ncm {m.n} {m.N}"]
    lines.extend(f"arc {color} {arc.i} {arc.j}" for color, arc in m.colored_arcs())
    return "\n".join(lines) + "\n"


def parse_ncm(text: str) -> MulticoloredNCM:
    """
    Parse a multicolored matching.

    Raises:
        FormatError: If the text is malformed or describes an invalid matching
    """
    rows = _lines(text)
    n, N = _header(rows, "ncm")
    layers: Dict[int, List[Arc]] = {color: [] for color in range(1, n)}
    previous = (0, 0)
    for number, fields in enumerate(rows[1:], start=2):
        if fields[0] != "arc" or len(fields) != 4:
            raise FormatError("expected 'arc <color> <i> <j>'", number)
        color, i, j = (_int(f, number) for f in fields[1:])
        if (color, i) <= previous:
            raise FormatError("arcs must be sorted by (color, start)", number)
        previous = (color, i)
        if color not in layers:
            raise FormatError(f"color {color} is outside 1..{n - 1}", number)
        try:
            layers[color].append(Arc(i=i, j=j))
        except ValidationError as e:
            raise FormatError(_first_error(e), number) from e

    try:
        return MulticoloredNCM(
            n=n,
            N=N,
            layers=tuple(ColoredMatching(color=c, arcs=tuple(arcs)) for c, arcs in layers.items()),
        )
    except ValidationError as e:
        raise FormatError(_first_error(e)) from e


def format_web(w: WebGraph) -> str:
    """
    Print a web: header, interior vertices by id, then edges.

    Boundary vertices are implicit. Edges are printed in (tail, head, weight)
    order with their flag ('-' or 'u').
    """
    lines = [f"web {w.n} {w.N}"]
    lines.extend(
        f"ivertex {v.id[1:]} {v.position.x2} {v.position.y2}" for v in w.interior_vertices()
    )
    lines.extend(f"edge {e.tail} {e.head} {e.weight} {e.flag.value}" for e in w.edges)
    return "\n".join(lines) + "\n"


def parse_web(text: str) -> WebGraph:
    """
    Parse a web. Edge paths are straight segments between their endpoints.

    Raises:
        FormatError: If the text is malformed or describes an invalid web
    """
    rows = _lines(text)
    n, N = _header(rows, "web")
    if N < 1:
        raise FormatError("a web needs at least one boundary point", 1)
    vertices: List[WebVertex] = [boundary_vertex(label) for label in range(1, N + 1)]
    edges: List[WebEdge] = []
    expected_id = 1
    try:
        for number, fields in enumerate(rows[1:], start=2):
            if fields[0] == "ivertex" and len(fields) == 4 and not edges:
                vertex_id, x2, y2 = (_int(f, number) for f in fields[1:])
                if vertex_id != expected_id:
                    raise FormatError(f"expected interior vertex {expected_id}", number)
                expected_id += 1
                vertices.append(
                    WebVertex(
                        id=interior_token(vertex_id),
                        kind=VertexKind.INTERIOR,
                        position=Point2(x2=x2, y2=y2),
                    )
                )
            elif fields[0] == "edge" and len(fields) == 5:
                tail, head, weight, flag = fields[1:]
                if not _TOKEN.match(tail) or not _TOKEN.match(head):
                    raise FormatError("edge endpoints must be b<label> or i<id>", number)
                if flag not in ("-", "u"):
                    raise FormatError(f"unknown edge flag {flag!r}", number)
                edges.append(
                    WebEdge(tail=tail, head=head, weight=_int(weight, number), flag=EdgeFlag(flag))
                )
            else:
                raise FormatError("expected an 'ivertex' or 'edge' line", number)

        positions = {v.id: v.position for v in vertices}
        missing = [e for e in edges if e.tail not in positions or e.head not in positions]
        if missing:
            raise FormatError(f"edge {missing[0].edge_id} has an unknown endpoint")
        edges = [
            e.model_copy(update={"path": (positions[e.tail], positions[e.head])}) for e in edges
        ]
        w = WebGraph(n=n, N=N, vertices=tuple(vertices), edges=sort_edges(edges))
    except ValidationError as e:
        raise FormatError(_first_error(e)) from e

    if format_web(w) != text:
        raise FormatError("edges are not in canonical (tail, head, weight) order")
    return w


def parse_any(text: str) -> Parsed:
    """Parse a tableau, matching or web, chosen by the header word."""
    word = text.split(" ", 1)[0]
    if word == "tableau":
        return parse_tableau(text)
    if word == "ncm":
        return parse_ncm(text)
    if word == "web":
        return parse_web(text)
    raise FormatError(f"unknown header {word!r}", 1)


def format_report(reports: Sequence[VerificationReport]) -> str:
    """
    Print reports as sorted '<shape> <check> <status> <witness-or-dash>' lines.

    Witness newlines are replaced by '|' so every outcome stays on one line.
    """
    lines = []
    for report in reports:
        if report.error is not None:
            lines.append(f"{report.shape} enumerate error {report.error}")
        for outcome in report.checks.values():
            witness = (outcome.witness or "-").replace("\n", "|")
            lines.append(f"{report.shape} {outcome.check} {outcome.status.value} {witness}")
    return "".join(f"{line}\n" for line in sorted(lines))


def _first_error(e: ValidationError) -> str:
    error = e.errors()[0]
    return str(error.get("msg", e)).replace("Value error, ", "")

"""
Test module for SVG and TikZ rendering
"""

from xml.etree import ElementTree as ET

import pytest
from pydantic import ValidationError

from webvac.core.errors import UnsupportedKind
from webvac.core.matching import ncm_from_tableau
from webvac.core.render import SVG_NS, render
from webvac.core.tableau import validate
from webvac.core.web import standardize_boundary, web_from_ncm
from webvac.models.render import RenderFormat, RenderKind, RenderSpec

NS = f"{{{SVG_NS}}}"


def _svg(document: str) -> ET.Element:
    return ET.fromstring(document)


def _by_class(root: ET.Element, tag: str, cls: str):
    return [el for el in root.iter(f"{NS}{tag}") if el.get("class", "").split(" ")[0] == cls]


def test_ncm_svg(intro_tableau):
    """Test one colored arc per matching arc and one label per point."""

    root = _svg(render(ncm_from_tableau(intro_tableau), RenderSpec(kind=RenderKind.NCM)))
    arcs = _by_class(root, "path", "arc")

    # Assertions
    assert root.tag == f"{NS}svg"
    assert (root.get("width"), root.get("height")) == ("440", "160")
    assert len(arcs) == 8
    assert {a.get("stroke") for a in arcs} == {"blue", "red", "green", "violet"}
    assert [t.text for t in _by_class(root, "text", "label")] == [str(p) for p in range(1, 11)]


def test_ncm_svg_scales(intro_tableau):
    """Test that the scale multiplies the canvas."""

    root = _svg(render(ncm_from_tableau(intro_tableau), RenderSpec(kind=RenderKind.NCM, scale=2)))

    # Assertions
    assert root.get("width") == "880"


def test_web_svg(sl3_tableau):
    """Test vertices, edges, weights and arrowheads of the 3 x 3 web."""

    w = standardize_boundary(web_from_ncm(ncm_from_tableau(sl3_tableau)))
    root = _svg(render(w, RenderSpec(kind=RenderKind.WEB)))
    edges = _by_class(root, "polyline", "edge")

    # Assertions
    assert len(_by_class(root, "circle", "vertex")) == 5
    assert len(edges) == 12
    assert len(_by_class(root, "text", "label")) == 9
    assert sorted(t.text for t in _by_class(root, "text", "weight")) == sorted(
        str(e.weight) for e in w.edges
    )
    assert all(e.get("marker-end") or e.get("marker-mid") for e in edges)
    assert root.find(f"{NS}defs/{NS}marker").get("id") == "arrow"


def test_undirected_edges_have_no_arrows():
    """Test that orientation-free edges are drawn without a marker."""

    w = standardize_boundary(web_from_ncm(ncm_from_tableau(validate([[1, 2], [3, 4]]))))
    edges = _by_class(_svg(render(w, RenderSpec(kind=RenderKind.WEB))), "polyline", "edge")

    # Assertions
    assert len(edges) == 2
    assert not any(e.get("marker-end") or e.get("marker-mid") for e in edges)


def test_render_is_deterministic(evac_flip_tableau):
    """Test that equal inputs give byte-identical documents."""

    w = standardize_boundary(web_from_ncm(ncm_from_tableau(evac_flip_tableau)))
    spec = RenderSpec(kind=RenderKind.WEB)

    # Assertions
    assert render(w, spec) == render(w, spec)
    assert render(w, spec).endswith("</svg>\n")


def test_ncm_tikz(intro_tableau):
    """Test the TikZ picture of a matching."""

    text = render(
        ncm_from_tableau(intro_tableau), RenderSpec(kind=RenderKind.NCM, format=RenderFormat.TIKZ)
    )

    # Assertions
    assert text.startswith("\\begin{tikzpicture}[scale=1]\n")
    assert text.endswith("\\end{tikzpicture}\n")
    assert text.count("to[out=90,in=90]") == 8
    assert "\\draw[blue, thick] (1,0) to[out=90,in=90] (4,0);" in text


def test_web_tikz(sl3_tableau):
    """Test one draw command per edge and one dot per interior vertex."""

    w = standardize_boundary(web_from_ncm(ncm_from_tableau(sl3_tableau)))
    text = render(w, RenderSpec(kind=RenderKind.WEB, format=RenderFormat.TIKZ))

    # Assertions
    assert text.count("\\filldraw") == 5
    assert text.count("->-]") == 12


def test_wrong_kind(intro_tableau):
    """Test that a matching cannot be drawn as a web and vice versa."""

    m = ncm_from_tableau(intro_tableau)
    w = web_from_ncm(m)

    with pytest.raises(UnsupportedKind):
        render(m, RenderSpec(kind=RenderKind.WEB))
    with pytest.raises(UnsupportedKind):
        render(w, RenderSpec(kind=RenderKind.NCM))


def test_web_without_edges(sl3_tableau):
    """Test that an empty web has nothing to draw."""

    w = web_from_ncm(ncm_from_tableau(sl3_tableau))

    with pytest.raises(UnsupportedKind):
        render(w.model_copy(update={"edges": ()}), RenderSpec(kind=RenderKind.WEB))


def test_palette_cycles():
    """Test palette lookup by arc color."""

    spec = RenderSpec(kind=RenderKind.NCM)

    # Assertions
    assert spec.color_for(1) == "blue"
    assert spec.color_for(9) == "blue"
    assert RenderSpec(kind=RenderKind.NCM, palette=("black",)).color_for(3) == "black"


def test_spec_rejects_bad_scale():
    """Test that the scale must be positive."""

    with pytest.raises(ValidationError):
        RenderSpec(kind=RenderKind.NCM, scale=0)

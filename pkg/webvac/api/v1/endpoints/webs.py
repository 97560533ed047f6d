"""
Web endpoints for webvac API

This module defines the API endpoints for building web graphs from tableaux
and for the operations on webs: reflection, edge flips, the flow check, the
sl3/sl4 conventions and rendering.
"""

import logging

from fastapi import APIRouter, HTTPException, Query
from fastapi.responses import Response

from webvac.core.equivalence import apply_convention_34
from webvac.core.errors import WebvacError
from webvac.core.matching import ncm_from_tableau
from webvac.core.render import render
from webvac.core.tableau import validate
from webvac.core.web import check_flow, flip_edges, reflect_web, standardize_boundary, web_from_ncm
from webvac.models.render import RenderFormat, RenderKind, RenderSpec
from webvac.models.tableau import GridRequest
from webvac.models.web import FlipRequest, FlowCheck, WebGraph

# Set up logging
logger = logging.getLogger(__name__)

# Create router
router = APIRouter()

MEDIA_TYPES = {RenderFormat.SVG: "image/svg+xml", RenderFormat.TIKZ: "text/plain"}


@router.post(
    "/from-tableau",
    response_model=WebGraph,
    summary="Web of a tableau",
    description="""
    Build the web graph of a rectangular tableau from its matching.

    The web is returned with its boundary in standard form: every boundary
    edge points out of the boundary with weight 1. With raw=true the web is
    returned as constructed, before standardization.

    Examples:
    - POST /v1/webs/from-tableau
    - POST /v1/webs/from-tableau?raw=true
    """,
)
def web_from_tableau(
    request: GridRequest,
    raw: bool = Query(False, description="Skip boundary standardization"),
):
    """
    Build the web of a tableau.

    Args:
        request: tableau with at least two rows
        raw: return the web before boundary standardization

    Returns:
        WebGraph: the web
    """
    try:
        t = validate(request.entries)
        logger.info(f"Building {'raw ' if raw else ''}web of a {t.shape} tableau")
        w = web_from_ncm(ncm_from_tableau(t))
        return w if raw else standardize_boundary(w)
    except WebvacError:
        raise
    except Exception as e:
        logger.error(f"Error building web: {str(e)}")
        raise HTTPException(status_code=500, detail=str(e))


@router.post(
    "/reflect",
    response_model=WebGraph,
    summary="Reflect a web",
    description="Mirror a web over the vertical line through the middle of its boundary.",
)
def reflect(w: WebGraph):
    """
    Reflect a web.

    Args:
        w: web to reflect

    Returns:
        WebGraph: the mirrored web with boundary labels reversed
    """
    try:
        return reflect_web(w)
    except WebvacError:
        raise
    except Exception as e:
        logger.error(f"Error reflecting web: {str(e)}")
        raise HTTPException(status_code=500, detail=str(e))


@router.post(
    "/flip",
    response_model=WebGraph,
    summary="Flip edges",
    description="""
    Reverse each listed edge and replace its weight x by n - x.

    Edges are named by their endpoints, for example "i3-i7" or "b2-i1". An id
    that names no edge of the web is rejected with a 400 error.
    """,
)
def flip(request: FlipRequest):
    """
    Flip edges of a web.

    Args:
        request: web and edge ids

    Returns:
        WebGraph: the web after the flips
    """
    try:
        logger.info(f"Flipping {len(request.edges)} edge(s)")
        return flip_edges(request.web, request.edges)
    except WebvacError:
        raise
    except Exception as e:
        logger.error(f"Error flipping edges: {str(e)}")
        raise HTTPException(status_code=500, detail=str(e))


@router.post(
    "/flow",
    response_model=FlowCheck,
    summary="Check flow",
    description="Check that flow is conserved mod n at every interior vertex.",
)
def flow(w: WebGraph):
    """
    Check flow conservation.

    Args:
        w: web to check

    Returns:
        FlowCheck: ok, or the first vertex whose balance is not 0 mod n
    """
    try:
        return check_flow(w)
    except Exception as e:
        logger.error(f"Error checking flow: {str(e)}")
        raise HTTPException(status_code=500, detail=str(e))


@router.post(
    "/convention",
    response_model=WebGraph,
    summary="Apply sl3/sl4 conventions",
    description="""
    Rewrite an sl3 or sl4 web into its customary form by edge flips. Webs with
    n other than 3 or 4 are rejected with a 400 error.
    """,
)
def convention(w: WebGraph):
    """
    Apply the sl3/sl4 conventions.

    Args:
        w: web with n = 3 or n = 4

    Returns:
        WebGraph: the rewritten web
    """
    try:
        return apply_convention_34(w)
    except WebvacError:
        raise
    except Exception as e:
        logger.error(f"Error applying conventions: {str(e)}")
        raise HTTPException(status_code=500, detail=str(e))


@router.post(
    "/render",
    summary="Render a tableau's matching or web",
    description="""
    Draw the matching (kind=ncm) or standardized web (kind=web) of a tableau
    as an SVG image or a TikZ picture.

    Examples:
    - POST /v1/webs/render?kind=web&format=svg
    - POST /v1/webs/render?kind=ncm&format=tikz
    """,
    response_class=Response,
)
def render_tableau(
    request: GridRequest,
    kind: RenderKind = Query(RenderKind.WEB, description="What to draw"),
    format: RenderFormat = Query(RenderFormat.SVG, description="Output format"),
    scale: float = Query(1.0, gt=0, description="Scale factor"),
):
    """
    Render the matching or web of a tableau.

    Args:
        request: tableau with at least two rows
        kind: draw the matching or the web
        format: svg or tikz
        scale: scale factor

    Returns:
        Response: the document with an SVG or plain-text media type
    """
    try:
        t = validate(request.entries)
        m = ncm_from_tableau(t)
        obj = m if kind == RenderKind.NCM else standardize_boundary(web_from_ncm(m))
        document = render(obj, RenderSpec(kind=kind, format=format, scale=scale))
        return Response(content=document, media_type=MEDIA_TYPES[format])
    except WebvacError:
        raise
    except Exception as e:
        logger.error(f"Error rendering {kind.value}: {str(e)}")
        raise HTTPException(status_code=500, detail=str(e))

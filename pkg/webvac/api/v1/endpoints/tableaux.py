"""
Tableau endpoints for webvac API

This module defines the API endpoints for validating rectangular standard
Young tableaux and running promotion, evacuation and jeu de taquin on them.
"""

import logging
from itertools import islice
from typing import Dict, List

from fastapi import APIRouter, Depends, HTTPException, Query

from webvac.core.config import get_enumeration_budget
from webvac.core.errors import WebvacError
from webvac.core.tableau import (
    complement,
    count_syt,
    enumerate_syt,
    evacuate,
    evacuate_fast,
    jdt_slide_path,
    promote_n,
    rotate180,
    validate,
)
from webvac.models.tableau import GridRequest, GridResponse, Shape, SlideRequest, SlideResult, StandardTableau

# Set up logging
logger = logging.getLogger(__name__)

# Create router
router = APIRouter()


# Adding pagination parameters
def common_parameters(
    skip: int = Query(0, ge=0, description="Number of items to skip"),
    limit: int = Query(100, ge=1, le=1000, description="Maximum number of items to return"),
):
    """
    Common pagination parameters for endpoints that return lists.

    Args:
        skip: Number of items to skip
        limit: Maximum number of items to return

    Returns:
        dict: Dictionary containing the pagination parameters
    """
    return {"skip": skip, "limit": limit}


def shape_parameters(
    n: int = Query(..., ge=1, description="Number of rows"),
    k: int = Query(..., ge=1, description="Number of columns"),
) -> Shape:
    """Rectangle given as query parameters."""
    return Shape(n=n, k=k)


@router.post(
    "/validate",
    response_model=StandardTableau,
    summary="Validate a tableau",
    description="""
    Check that a grid is a rectangular standard Young tableau.

    Returns the validated tableau with its shape. A grid that is ragged, not a
    bijection onto 1..N, or not increasing along rows and columns is rejected
    with a 400 error naming the first offending cell.
    """,
)
def validate_tableau(request: GridRequest):
    """
    Validate a grid.

    Args:
        request: grid to validate

    Returns:
        StandardTableau: the validated tableau

    Raises:
        HTTPException: If an unexpected error occurs
    """
    try:
        logger.info(f"Validating grid with {len(request.entries)} rows")
        return validate(request.entries)
    except WebvacError:
        raise
    except Exception as e:
        logger.error(f"Error validating tableau: {str(e)}")
        raise HTTPException(status_code=500, detail=str(e))


@router.post(
    "/evacuate",
    response_model=StandardTableau,
    summary="Evacuate a tableau",
    description="""
    Compute the evacuation of a rectangular tableau.

    By default evacuation runs the remove-slide-fix procedure. With fast=true
    it rotates the tableau by 180 degrees and complements its entries, which
    gives the same tableau on rectangles.

    Examples:
    - POST /v1/tableaux/evacuate
    - POST /v1/tableaux/evacuate?fast=true
    """,
)
def evacuate_tableau(
    request: GridRequest,
    fast: bool = Query(False, description="Use rotation and complement"),
):
    """
    Evacuate a tableau.

    Args:
        request: tableau to evacuate
        fast: use rotation and complement instead of sliding

    Returns:
        StandardTableau: the evacuated tableau
    """
    try:
        t = validate(request.entries)
        logger.info(f"Evacuating tableau of shape {t.shape} (fast={fast})")
        return evacuate_fast(t) if fast else evacuate(t)
    except WebvacError:
        raise
    except Exception as e:
        logger.error(f"Error evacuating tableau: {str(e)}")
        raise HTTPException(status_code=500, detail=str(e))


@router.post(
    "/promote",
    response_model=StandardTableau,
    summary="Promote a tableau",
    description="Apply promotion to a tableau the given number of times (default once).",
)
def promote_tableau(
    request: GridRequest,
    steps: int = Query(1, ge=0, description="Number of promotions"),
):
    """
    Promote a tableau repeatedly.

    Args:
        request: tableau to promote
        steps: number of promotions

    Returns:
        StandardTableau: the promoted tableau
    """
    try:
        t = validate(request.entries)
        logger.info(f"Promoting tableau of shape {t.shape} {steps} time(s)")
        return promote_n(t, steps)
    except WebvacError:
        raise
    except Exception as e:
        logger.error(f"Error promoting tableau: {str(e)}")
        raise HTTPException(status_code=500, detail=str(e))


@router.post(
    "/slide",
    response_model=SlideResult,
    summary="Jeu de taquin slide",
    description="""
    Remove the entry at a cell and slide the hole to an outer corner.

    The response holds the final filling, with the hole marked null, and the
    cells the hole visited in order.
    """,
)
def slide_tableau(request: SlideRequest):
    """
    Slide the hole left by removing one cell.

    Args:
        request: tableau and removed cell

    Returns:
        SlideResult: final filling and hole path
    """
    try:
        t = validate(request.entries)
        logger.info(f"Sliding from cell {request.corner} in tableau of shape {t.shape}")
        return jdt_slide_path(t, request.corner)
    except WebvacError:
        raise
    except Exception as e:
        logger.error(f"Error sliding tableau: {str(e)}")
        raise HTTPException(status_code=500, detail=str(e))


@router.post(
    "/rotate",
    response_model=GridResponse,
    summary="Rotate a tableau",
    description="""
    Rotate a tableau by 180 degrees. With complement=true every entry i is
    also replaced by N + 1 - i, which gives the evacuation.
    """,
)
def rotate_tableau(
    request: GridRequest,
    complement_entries: bool = Query(False, alias="complement", description="Also complement entries"),
):
    """
    Rotate a tableau by 180 degrees.

    Args:
        request: tableau to rotate
        complement_entries: also replace i by N + 1 - i

    Returns:
        GridResponse: the rotated grid, which is not a standard tableau unless complemented
    """
    try:
        t = validate(request.entries)
        grid = rotate180(t)
        if complement_entries:
            grid = complement(grid, t.shape.N)
        return GridResponse(shape=t.shape, entries=grid)
    except WebvacError:
        raise
    except Exception as e:
        logger.error(f"Error rotating tableau: {str(e)}")
        raise HTTPException(status_code=500, detail=str(e))


@router.get(
    "/count",
    response_model=Dict[str, int],
    summary="Count tableaux",
    description="Number of standard Young tableaux of an n x k rectangle, by the hook-length formula.",
)
def count_tableaux(shape: Shape = Depends(shape_parameters)):
    """
    Count the tableaux of a shape.

    Args:
        shape: rectangle from the n and k query parameters

    Returns:
        Dict[str, int]: the shape and its tableau count
    """
    try:
        return {"n": shape.n, "k": shape.k, "count": count_syt(shape)}
    except Exception as e:
        logger.error(f"Error counting tableaux: {str(e)}")
        raise HTTPException(status_code=500, detail=str(e))


@router.get(
    "/enumerate",
    response_model=List[StandardTableau],
    summary="Enumerate tableaux",
    description="""
    List the standard Young tableaux of an n x k rectangle in reading-word order.

    Shapes with more tableaux than the configured budget are rejected with a
    400 error before anything is generated.

    Examples:
    - GET /v1/tableaux/enumerate?n=2&k=3
    - GET /v1/tableaux/enumerate?n=3&k=3&skip=10&limit=5
    """,
)
def enumerate_tableaux(
    shape: Shape = Depends(shape_parameters),
    commons: dict = Depends(common_parameters),
):
    """
    Enumerate the tableaux of a shape, one page at a time.

    Args:
        shape: rectangle from the n and k query parameters
        commons: Common pagination parameters

    Returns:
        List[StandardTableau]: the requested page
    """
    try:
        logger.info(f"Enumerating tableaux of shape {shape} (skip={commons['skip']}, limit={commons['limit']})")
        tableaux = enumerate_syt(shape, get_enumeration_budget())
        return list(islice(tableaux, commons["skip"], commons["skip"] + commons["limit"]))
    except WebvacError:
        raise
    except Exception as e:
        logger.error(f"Error enumerating tableaux: {str(e)}")
        raise HTTPException(status_code=500, detail=str(e))

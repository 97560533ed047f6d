"""
Matching endpoints for webvac API

This module defines the API endpoints for building multicolored noncrossing
matchings from tableaux, reflecting them, and recovering tableaux from them.
"""

import logging

from fastapi import APIRouter, HTTPException, Query

from webvac.core.errors import WebvacError
from webvac.core.matching import (
    is_standard_rectangular,
    ncm_from_tableau,
    reflect_ncm,
    rotated_ncm_of,
    tableau_from_ncm,
)
from webvac.core.tableau import validate
from webvac.models.matching import MulticoloredNCM, StandardRectangularCheck
from webvac.models.tableau import GridRequest, StandardTableau

# Set up logging
logger = logging.getLogger(__name__)

# Create router
router = APIRouter()


@router.post(
    "/from-tableau",
    response_model=MulticoloredNCM,
    summary="Matching of a tableau",
    description="""
    Build the multicolored noncrossing matching of a rectangular tableau.

    Layer x pairs each entry of row x + 1 with the rightmost unpaired smaller
    entry of row x. With rotated=true the rotated matching is built instead,
    from the 180 degree rotation of the tableau.

    Examples:
    - POST /v1/matchings/from-tableau
    - POST /v1/matchings/from-tableau?rotated=true
    """,
)
def matching_from_tableau(
    request: GridRequest,
    rotated: bool = Query(False, description="Build the rotated matching"),
):
    """
    Build the matching of a tableau.

    Args:
        request: tableau with at least two rows
        rotated: build the rotated matching instead

    Returns:
        MulticoloredNCM: the matching
    """
    try:
        t = validate(request.entries)
        logger.info(f"Building {'rotated ' if rotated else ''}matching of a {t.shape} tableau")
        return rotated_ncm_of(t) if rotated else ncm_from_tableau(t)
    except WebvacError:
        raise
    except Exception as e:
        logger.error(f"Error building matching: {str(e)}")
        raise HTTPException(status_code=500, detail=str(e))


@router.post(
    "/reflect",
    response_model=MulticoloredNCM,
    summary="Reflect a matching",
    description="Mirror every arc over the middle of the boundary and swap color x with n - x.",
)
def reflect_matching(m: MulticoloredNCM):
    """
    Reflect a matching.

    Args:
        m: matching to reflect

    Returns:
        MulticoloredNCM: the reflected matching
    """
    try:
        return reflect_ncm(m)
    except WebvacError:
        raise
    except Exception as e:
        logger.error(f"Error reflecting matching: {str(e)}")
        raise HTTPException(status_code=500, detail=str(e))


@router.post(
    "/check",
    response_model=StandardRectangularCheck,
    summary="Check rectangular conditions",
    description="""
    Test whether a matching has the shared-endpoint pattern of a matching
    built from a rectangular tableau. The first violation is reported.
    """,
)
def check_matching(m: MulticoloredNCM):
    """
    Check a matching for the rectangular conditions.

    Args:
        m: matching to check

    Returns:
        StandardRectangularCheck: ok, or the first violation
    """
    try:
        return is_standard_rectangular(m)
    except Exception as e:
        logger.error(f"Error checking matching: {str(e)}")
        raise HTTPException(status_code=500, detail=str(e))


@router.post(
    "/to-tableau",
    response_model=StandardTableau,
    summary="Tableau of a matching",
    description="""
    Recover the tableau a standard rectangular matching was built from.
    Matchings that do not come from a tableau are rejected with a 400 error.
    """,
)
def matching_to_tableau(m: MulticoloredNCM):
    """
    Recover the tableau of a matching.

    Args:
        m: standard rectangular matching

    Returns:
        StandardTableau: the tableau whose matching is m
    """
    try:
        return tableau_from_ncm(m)
    except WebvacError:
        raise
    except Exception as e:
        logger.error(f"Error recovering tableau: {str(e)}")
        raise HTTPException(status_code=500, detail=str(e))

"""
Verification endpoints for webvac API

This module exposes the exhaustive verifier for a single shape.
"""

import logging
from typing import Optional

from fastapi import APIRouter, HTTPException, Query

from webvac.core.config import get_enumeration_budget
from webvac.core.verify import verify_shape
from webvac.models.tableau import Shape
from webvac.models.verification import VerificationReport

# Set up logging
logger = logging.getLogger(__name__)

# Create router
router = APIRouter()


@router.get(
    "",
    response_model=VerificationReport,
    summary="Verify a shape",
    description="""
    Run every check on every standard Young tableau of an n x k rectangle.

    Shapes with more tableaux than the budget are not enumerated; the report
    then carries an error and no checks. The budget defaults to the configured
    one (WEBVAC_BUDGET, 20000).

    Examples:
    - GET /v1/verify?n=2&k=2
    - GET /v1/verify?n=3&k=3&budget=100
    """,
)
def verify(
    n: int = Query(..., ge=1, description="Number of rows"),
    k: int = Query(..., ge=1, description="Number of columns"),
    budget: Optional[int] = Query(None, ge=1, description="Enumeration budget"),
):
    """
    Verify one shape.

    Args:
        n: number of rows
        k: number of columns
        budget: enumeration budget

    Returns:
        VerificationReport: aggregated outcome per check
    """
    try:
        shape = Shape(n=n, k=k)
        limit = budget if budget is not None else get_enumeration_budget()
        logger.info(f"Verifying shape {shape} with budget {limit}")
        return verify_shape(shape, limit)
    except Exception as e:
        logger.error(f"Error verifying shape {n}x{k}: {str(e)}")
        raise HTTPException(status_code=500, detail=str(e))

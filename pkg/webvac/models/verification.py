"""
Verification models for webvac

This module defines the per-check outcomes and per-shape reports produced by
the exhaustive verifier.
"""

from enum import Enum
from typing import Dict, Optional

from pydantic import BaseModel, Field

from webvac.models.tableau import Shape


class CheckStatus(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    SKIP = "skip"


class CheckOutcome(BaseModel):
    """
    Status of one named check.

    Attributes:
        check: name of the check
        status: pass, fail or skip
        witness: for failures, the reading word of the first failing tableau and
            the offending object on a single line
    """

    check: str = Field(..., description="Check name")
    status: CheckStatus = Field(..., description="Outcome")
    witness: Optional[str] = Field(None, description="First failure, reproducible")

    model_config = {
        "frozen": True,
        "json_schema_extra": {
            "example": {
                "check": "left_square",
                "status": "fail",
                "witness": "word=1,3,2,4 ncm 2 4|arc 1 1 2|arc 1 3 4|",
            }
        },
    }


class VerificationReport(BaseModel):
    """
    Aggregated outcome of every check over every tableau of one shape.

    A shape whose tableau count exceeds the budget gets an error and no checks.
    """

    shape: Shape = Field(..., description="Shape that was enumerated")
    tableau_count: int = Field(..., ge=0, description="Number of tableaux checked")
    checks: Dict[str, CheckOutcome] = Field(default_factory=dict, description="Outcome per check")
    error: Optional[str] = Field(None, description="Why the shape was not checked")

    model_config = {
        "json_schema_extra": {
            "example": {
                "shape": {"n": 2, "k": 2, "N": 4},
                "tableau_count": 2,
                "checks": {
                    "left_square": {"check": "left_square", "status": "pass", "witness": None}
                },
                "error": None,
            }
        }
    }

    @property
    def ok(self) -> bool:
        """True when nothing failed and the shape was enumerated."""
        return self.error is None and all(
            c.status != CheckStatus.FAIL for c in self.checks.values()
        )

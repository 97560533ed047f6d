"""
Exception hierarchy for webvac

Every failure raised by the core package derives from WebvacError. Errors caused
by bad input derive from InputError (and ValueError); errors that signal a broken
internal contract derive from InternalCheckError (and RuntimeError). The CLI and
the HTTP layer map the two families to different exit codes and status codes.
"""

from typing import Optional


class WebvacError(Exception):
    """Base class for all webvac errors."""


class InputError(WebvacError, ValueError):
    """The caller supplied an object or text that violates a precondition."""


class InternalCheckError(WebvacError, RuntimeError):
    """A construction produced something its own invariants rule out."""


class NotRectangular(InputError):
    """A grid is empty or its rows have different lengths."""


class NotBijective(InputError):
    """Some value of 1..N is missing from a grid or appears twice."""


class NotIncreasing(InputError):
    """
    A row or column of a filling is not strictly increasing.

    Attributes:
        row: 1-based row of the offending cell
        column: 1-based column of the offending cell
    """

    def __init__(self, message: str, row: int, column: int):
        super().__init__(message)
        self.row = row
        self.column = column


class BudgetExceeded(InputError):
    """
    The number of tableaux of a shape is larger than the enumeration budget.

    Attributes:
        count: number of tableaux the shape has
        budget: the budget that was in force
    """

    def __init__(self, count: int, budget: int):
        super().__init__(f"shape has {count} tableaux, budget is {budget}")
        self.count = count
        self.budget = budget


class NotStandardRectangular(InputError):
    """A multicolored matching does not come from a rectangular tableau."""


class FormatError(InputError):
    """
    Text does not follow one of the line formats.

    Attributes:
        line: 1-based line number where parsing stopped, if known
    """

    def __init__(self, message: str, line: Optional[int] = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class UnknownEdge(InputError):
    """An edge id does not name an edge of the web."""


class MismatchedBoundary(InputError):
    """Two webs with different n or N were compared."""


class UnsupportedKind(InputError):
    """An object cannot be handled as the requested kind."""


class DegenerateArrangement(InternalCheckError):
    """Two crossings coincide, or a crossing lies on an arc apex."""


class ConventionUnreachable(InternalCheckError):
    """Edge flips cannot bring a web into the customary sl3/sl4 form."""

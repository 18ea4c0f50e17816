"""Exception hierarchy shared by the library and the CLI."""
from __future__ import annotations

from typing import List, Optional


class TrigFormsError(Exception):
    """Base class for every error raised on purpose by this package."""


class DegreeError(TrigFormsError, ValueError):
    """A degree or index precondition does not hold."""


class SingularMatrixError(TrigFormsError, ValueError):
    pass


class InexactDivisionError(TrigFormsError, ArithmeticError):
    pass


class PrecisionError(TrigFormsError, RuntimeError):
    """Root isolation did not converge at any attempted precision."""


class QuadratureError(TrigFormsError, RuntimeError):
    pass


class GroupClosureError(TrigFormsError, RuntimeError):
    pass


class FactorizationError(TrigFormsError, RuntimeError):
    """An exact product check of a tilde-form factorization failed."""


class InconsistencyError(TrigFormsError, RuntimeError):
    pass


class UnsupportedWeightError(TrigFormsError, NotImplementedError):
    """W_F requested for a group with non-integral elements."""


class OutOfScopeError(TrigFormsError, ValueError):
    """An expected-result oracle was queried outside the statement's range."""


class IndefiniteFormError(TrigFormsError, ValueError):
    """A form with a real projective root where a definite one is required."""


class FormSourceError(TrigFormsError, ValueError):
    def __init__(self, message: str, suggestions: Optional[List[str]] = None):
        super().__init__(message)
        self.suggestions = list(suggestions or [])

    def __str__(self) -> str:
        base = super().__str__()
        if self.suggestions:
            return f"{base} (did you mean: {', '.join(self.suggestions)}?)"
        return base


# exit codes used by main.py
EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2
EXIT_COMPUTATION = 3

USAGE_ERRORS = (
    FormSourceError,
    DegreeError,
    OutOfScopeError,
    SingularMatrixError,
    UnsupportedWeightError,
    IndefiniteFormError,
)
COMPUTATION_ERRORS = (
    PrecisionError,
    QuadratureError,
    GroupClosureError,
    FactorizationError,
    InconsistencyError,
    InexactDivisionError,
)

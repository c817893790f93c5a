"""
Exit codes and the mapping from analyzer exceptions to them.
"""
from app.core.config import get_settings
from app.exceptions import (
    AmbiguousRootException,
    BranchBudgetException,
    DomainException,
    HypothesisException,
    InvalidArgumentException,
    NoRootException,
    RangeException,
    WrongRegimeException,
)
from app.schemas.common import ErrorReport

EXIT_OK = 0
EXIT_PROPERTY_FAILED = 1
EXIT_INVALID_INPUT = 2
EXIT_INTERNAL = 3

# Raised because of what the user asked for; everything else is an internal failure
INPUT_ERRORS = (
    InvalidArgumentException,
    NoRootException,
    AmbiguousRootException,
    WrongRegimeException,
    HypothesisException,
    RangeException,
    BranchBudgetException,
    DomainException,
)


def exit_code_for(error: Exception) -> int:
    return EXIT_INVALID_INPUT if isinstance(error, INPUT_ERRORS) else EXIT_INTERNAL


def error_report(beta_spec: str, error: Exception) -> ErrorReport:
    return ErrorReport(
        version=get_settings().APP_VERSION,
        beta_spec=beta_spec,
        error=type(error).__name__,
        message=str(error),
    )

from app.exceptions.custom_exceptions import (
    BetamorphException,
    InvalidArgumentException,
    NoRootException,
    AmbiguousRootException,
    UndecidableComparisonException,
    PrecisionExceededException,
    DomainException,
    RangeException,
    HypothesisException,
    WrongRegimeException,
    BranchBudgetException,
    ClassificationException,
    NotMarkovException,
    CertificateException,
    InconclusiveException
)

__all__ = [
    "BetamorphException",
    "InvalidArgumentException",
    "NoRootException",
    "AmbiguousRootException",
    "UndecidableComparisonException",
    "PrecisionExceededException",
    "DomainException",
    "RangeException",
    "HypothesisException",
    "WrongRegimeException",
    "BranchBudgetException",
    "ClassificationException",
    "NotMarkovException",
    "CertificateException",
    "InconclusiveException"
]

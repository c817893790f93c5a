class BetamorphException(Exception):
    """Base exception for all analyzer errors"""
    pass


class InvalidArgumentException(BetamorphException):
    """Exception raised for malformed or out-of-range arguments"""
    pass


class NoRootException(BetamorphException):
    """Exception raised when a polynomial has no root in the requested interval"""
    pass


class AmbiguousRootException(BetamorphException):
    """Exception raised when a polynomial has several roots and no hint selects one"""
    pass


class UndecidableComparisonException(BetamorphException):
    """Exception raised when interval refinement cannot separate a sign from zero"""
    pass


class PrecisionExceededException(BetamorphException):
    """Exception raised when a requested width is below the field precision limit"""
    pass


class DomainException(BetamorphException):
    """Exception raised when a point lies outside [0, 1]"""
    pass


class RangeException(BetamorphException):
    """Exception raised when a closed form is asked outside its validity range"""
    pass


class HypothesisException(BetamorphException):
    """Exception raised when beta lies below the range an orbit check assumes"""
    pass


class WrongRegimeException(BetamorphException):
    """Exception raised when an operation is applied to the wrong class of beta"""
    pass


class BranchBudgetException(BetamorphException):
    """Exception raised when an iterate would exceed the branch budget"""
    pass


class ClassificationException(BetamorphException):
    """Exception raised when a branch image matches no expected type"""
    pass


class NotMarkovException(BetamorphException):
    """Exception raised when an image is not a union of partition states"""
    pass


class CertificateException(BetamorphException):
    """Exception raised when a certificate sub-check fails"""
    pass


class InconclusiveException(BetamorphException):
    """Exception raised when no non-isomorphism witness is found"""
    pass

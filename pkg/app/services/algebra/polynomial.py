"""
Integer polynomials used to define beta: multinacci polynomials, the threshold
polynomials of the small-beta regimes, and the comma-separated text format.
"""
from dataclasses import dataclass
from typing import Tuple

from sympy import Poly, Symbol
from sympy.polys.domains import ZZ

from app.exceptions import InvalidArgumentException

X = Symbol("x")

# Real roots in (1, 2) of these polynomials separate the regimes below beta_3:
# beta vs gamma decides whether T^2 1 < 1/beta, beta vs eta whether S^2 1 < 1/beta.
THRESHOLD_COEFFS = {
    "gamma": (-1, 0, -1, 1),
    "eta": (-1, 1, -2, 1),
}


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial, coefficients in ascending degree."""
    coeffs: Tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def to_poly(self) -> Poly:
        return Poly.from_list(list(reversed(self.coeffs)) or [0], X, domain=ZZ)

    @classmethod
    def from_poly(cls, poly: Poly) -> "IntPolynomial":
        return cls(tuple(int(c) for c in reversed(poly.all_coeffs())))

    @classmethod
    def from_text(cls, text: str) -> "IntPolynomial":
        """Parse ``"-1,-1,1"`` (ascending degree) into x^2 - x - 1."""
        try:
            coeffs = tuple(int(part.strip()) for part in text.split(",") if part.strip())
        except ValueError:
            raise InvalidArgumentException(f"Polynomial coefficients must be integers: {text!r}")
        if not coeffs:
            raise InvalidArgumentException("Empty polynomial")
        return cls(coeffs)

    def to_text(self) -> str:
        return ",".join(str(c) for c in self.coeffs)

    def __str__(self) -> str:
        return str(self.to_poly().as_expr())


def multinacci_poly(n: int) -> IntPolynomial:
    """
    Minimal polynomial of the n-th multinacci number,
    x^n - x^(n-1) - ... - x - 1.
    """
    if n < 2:
        raise InvalidArgumentException(f"Multinacci index must be at least 2, got {n}")
    return IntPolynomial(tuple([-1] * n) + (1,))


def threshold_poly(name: str) -> IntPolynomial:
    try:
        return IntPolynomial(THRESHOLD_COEFFS[name])
    except KeyError:
        raise InvalidArgumentException(
            f"Unknown threshold {name!r}, expected one of {sorted(THRESHOLD_COEFFS)}"
        )

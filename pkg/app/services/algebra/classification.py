"""
Placement of beta among the multinacci numbers, and parsing of beta specs.
"""
import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional

from app.exceptions import InvalidArgumentException
from app.services.algebra.field import AlgebraicField, FieldElement, make_field, sign
from app.services.algebra.polynomial import IntPolynomial, multinacci_poly, threshold_poly

logger = logging.getLogger(__name__)


class BetaRegime(str, Enum):
    EXACT = "exact"
    GAP = "gap"
    SUBGOLDEN = "subgolden"


@dataclass(frozen=True)
class BetaClass:
    """
    Exact(n): beta is the n-th multinacci number.
    Gap(n): beta_{n-1} < beta < beta_n, n >= 3.
    SubGolden: 1 < beta < golden mean; n is 2 there.
    """
    regime: BetaRegime
    n: int

    @property
    def is_exact(self) -> bool:
        return self.regime == BetaRegime.EXACT

    @property
    def is_gap(self) -> bool:
        return self.regime == BetaRegime.GAP

    @property
    def is_subgolden(self) -> bool:
        return self.regime == BetaRegime.SUBGOLDEN

    def __str__(self) -> str:
        if self.is_subgolden:
            return "SubGolden"
        return f"{'Exact' if self.is_exact else 'Gap'}({self.n})"


def evaluate(poly: IntPolynomial, field: AlgebraicField) -> FieldElement:
    """poly(beta) as a field element, by Horner."""
    result = field.zero
    for c in reversed(poly.coeffs):
        result = result * field.beta + c
    return result


def classify_beta(field: AlgebraicField) -> BetaClass:
    """
    Exact(n) when p_n(beta) = 0, otherwise the least n with p_n(beta) < 0.

    p_n(beta) = beta^n - (beta^(n-1) + ... + 1) is built incrementally; since
    beta < 2 some p_n is eventually negative.
    """
    beta = field.beta
    power = beta * beta
    partial = field.one + beta
    n = 2
    while True:
        value = power - partial
        if value.is_zero:
            result = BetaClass(BetaRegime.EXACT, n)
            break
        if sign(value) < 0:
            if n == 2:
                result = BetaClass(BetaRegime.SUBGOLDEN, 2)
            else:
                result = BetaClass(BetaRegime.GAP, n)
            break
        partial = partial + power
        power = power * beta
        n += 1
    logger.debug(f"Classified beta {field.spec or field.minpoly} as {result}")
    return result


def parse_beta(spec: str, precision_limit: Optional[int] = None) -> AlgebraicField:
    """
    Parse a beta spec into a field.

    Accepted forms:
        multinacci:n
        rational:p/q
        poly:c0,c1,...          (ascending coefficients, unique root in (1, 2))
        poly:c0,c1,...@lo,hi    (root isolated by the rational hint)
    """
    if not spec or ":" not in spec:
        raise InvalidArgumentException(
            f"Invalid beta spec {spec!r}; expected multinacci:n, rational:p/q or poly:c0,c1,..."
        )
    kind, _, body = spec.partition(":")
    kind = kind.strip().lower()
    body = body.strip()

    if kind == "multinacci":
        try:
            n = int(body)
        except ValueError:
            raise InvalidArgumentException(f"Multinacci index must be an integer: {body!r}")
        return make_field(multinacci_poly(n), precision_limit=precision_limit, spec=spec)

    if kind == "rational":
        try:
            value = Fraction(body)
        except (ValueError, ZeroDivisionError):
            raise InvalidArgumentException(f"Invalid rational beta {body!r}")
        if not 1 < value < 2:
            raise InvalidArgumentException(f"beta must lie in (1, 2), got {value}")
        poly = IntPolynomial((-value.numerator, value.denominator))
        return make_field(poly, precision_limit=precision_limit, spec=spec)

    if kind == "poly":
        coeffs, _, hint_text = body.partition("@")
        hint = None
        if hint_text:
            parts = [part.strip() for part in hint_text.split(",")]
            if len(parts) != 2:
                raise InvalidArgumentException(f"Hint must be 'lo,hi', got {hint_text!r}")
            hint = (parts[0], parts[1])
        return make_field(
            IntPolynomial.from_text(coeffs), hint=hint, precision_limit=precision_limit, spec=spec
        )

    raise InvalidArgumentException(f"Unknown beta spec kind {kind!r}")


def threshold_field(name: str, precision_limit: Optional[int] = None) -> AlgebraicField:
    """Field of the threshold gamma (x^3 - x^2 - 1) or eta (x^3 - 2x^2 + x - 1)."""
    return make_field(threshold_poly(name), precision_limit=precision_limit, spec=f"threshold:{name}")


def compare_beta_with(field: AlgebraicField, name: str) -> int:
    """
    Sign of beta - threshold, decided inside Q(beta).

    Both threshold polynomials are increasing on (1, 2) with a single root
    there, so the sign of g(beta) is the sign of beta - threshold.
    """
    return sign(evaluate(threshold_poly(name), field))

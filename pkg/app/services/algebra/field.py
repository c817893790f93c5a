"""
Exact arithmetic in Q(beta) for a real algebraic beta in (1, 2).

Elements are residues modulo the minimal polynomial of beta, stored as dense
rational coefficient lists (highest degree first, as sympy's dup routines use).
Equality is decided algebraically; order is decided by refining the isolating
interval of beta and evaluating the residue with rational interval arithmetic.
"""
import logging
import threading
from fractions import Fraction
from typing import Any, List, Optional, Tuple

import mpmath
from sympy import Poly, Symbol, factor_list
from sympy.polys.densearith import dup_add, dup_mul, dup_neg, dup_rem, dup_sub
from sympy.polys.densetools import dup_eval
from sympy.polys.domains import QQ
from sympy.polys.euclidtools import dup_invert
from sympy.polys.polyerrors import NotInvertible

from app.core.config import get_settings
from app.core.metrics import comparisons_total, interval_refinements_total
from app.exceptions import (
    AmbiguousRootException,
    InvalidArgumentException,
    NoRootException,
    PrecisionExceededException,
    UndecidableComparisonException,
)
from app.services.algebra.polynomial import X, IntPolynomial

logger = logging.getLogger(__name__)

Interval = Tuple[Any, Any]

BETA = Symbol("beta")
ROOT_RANGE = (QQ(1), QQ(2))


def to_qq(value):
    """Convert int, Fraction, str ("p/q") or sympy Rational to a QQ element."""
    if isinstance(value, QQ.dtype):
        return value
    if isinstance(value, int):
        return QQ(value)
    if isinstance(value, Fraction):
        return QQ(value.numerator, value.denominator)
    if isinstance(value, str):
        try:
            frac = Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise InvalidArgumentException(f"Not a rational number: {value!r}")
        return QQ(frac.numerator, frac.denominator)
    try:
        return QQ.from_sympy(value)
    except Exception:
        raise InvalidArgumentException(f"Cannot use {value!r} as a rational number")


def to_fraction(value) -> Fraction:
    """Fraction of a QQ element or of a FieldElement with a constant residue."""
    if isinstance(value, FieldElement):
        rational = value.as_rational()
        if rational is None:
            raise InvalidArgumentException(f"{to_expression(value)} is not rational")
        value = rational
    return Fraction(int(QQ.numer(value)), int(QQ.denom(value)))


class AlgebraicField:
    """
    Q(beta) together with an isolating interval (lo, hi) of beta.

    The interval only ever shrinks. Bisection is serialized by a field-level
    lock so several threads may share one field.
    """

    def __init__(
        self,
        minpoly: IntPolynomial,
        lo,
        hi,
        precision_limit: int,
        source: Optional[IntPolynomial] = None,
        spec: Optional[str] = None,
    ):
        self.minpoly = minpoly
        self.source = source or minpoly
        self.spec = spec
        self.degree = minpoly.degree
        self.precision_limit = precision_limit
        self.modulus: List = [QQ(c) for c in reversed(minpoly.coeffs)]

        self._lo = to_qq(lo)
        self._hi = to_qq(hi)
        self._min_width = QQ(1, 2 ** precision_limit)
        self._lock = threading.Lock()
        self._steps = 0

        if self.is_rational:
            self._value = self._lo
            self._sign_lo = 0
        else:
            self._sign_lo = self._sign_of_minpoly(self._lo)

        self.zero = FieldElement(self, [])
        self.one = FieldElement(self, [QQ(1)])
        if self.is_rational:
            self.beta = FieldElement(self, [self._value])
        else:
            self.beta = FieldElement(self, [QQ(1), QQ(0)])
        self.inv_beta = self.one / self.beta

    @property
    def is_rational(self) -> bool:
        return self.degree == 1

    @property
    def interval(self) -> Interval:
        with self._lock:
            return self._lo, self._hi

    @property
    def refinement_steps(self) -> int:
        return self._steps

    def _sign_of_minpoly(self, point) -> int:
        value = dup_eval(self.modulus, point, QQ)
        return (value > 0) - (value < 0)

    def bisect(self) -> bool:
        """
        Halve the isolating interval once.

        Returns False when the interval is already narrower than
        2^-precision_limit, in which case nothing changes.
        """
        if self.is_rational:
            return False
        with self._lock:
            if self._hi - self._lo < self._min_width:
                return False
            mid = (self._lo + self._hi) / 2
            if self._sign_of_minpoly(mid) == self._sign_lo:
                self._lo = mid
            else:
                self._hi = mid
            self._steps += 1
        interval_refinements_total.inc()
        return True

    def element(self, coeffs) -> "FieldElement":
        """Build an element from ascending rational coefficients in beta."""
        rep = [to_qq(c) for c in reversed(list(coeffs))]
        return FieldElement(self, _reduce(_strip(rep), self.modulus))

    def from_rational(self, value) -> "FieldElement":
        return FieldElement(self, _strip([to_qq(value)]))

    def coerce(self, value) -> "FieldElement":
        if isinstance(value, FieldElement):
            if value.field is not self:
                raise InvalidArgumentException("Elements belong to different fields")
            return value
        return self.from_rational(value)

    def __repr__(self):
        lo, hi = self.interval
        return f"AlgebraicField(minpoly={self.minpoly}, interval=[{lo}, {hi}])"


def _strip(rep: List) -> List:
    i = 0
    while i < len(rep) and not rep[i]:
        i += 1
    return rep[i:]


def _reduce(rep: List, modulus: List) -> List:
    if len(rep) >= len(modulus):
        return dup_rem(rep, modulus, QQ)
    return rep


class FieldElement:
    """Immutable element of Q(beta)."""

    __slots__ = ("field", "rep")

    def __init__(self, field: AlgebraicField, rep: List):
        self.field = field
        self.rep = rep

    @property
    def coeffs(self) -> List:
        """Ascending rational coefficients of the residue."""
        return list(reversed(self.rep))

    @property
    def is_zero(self) -> bool:
        return not self.rep

    def as_rational(self):
        """The rational value when the residue is constant, else None."""
        if not self.rep:
            return QQ(0)
        if len(self.rep) == 1:
            return self.rep[0]
        return None

    def __add__(self, other):
        other = self.field.coerce(other)
        return FieldElement(self.field, dup_add(self.rep, other.rep, QQ))

    __radd__ = __add__

    def __sub__(self, other):
        other = self.field.coerce(other)
        return FieldElement(self.field, dup_sub(self.rep, other.rep, QQ))

    def __rsub__(self, other):
        return self.field.coerce(other) - self

    def __neg__(self):
        return FieldElement(self.field, dup_neg(self.rep, QQ))

    def __mul__(self, other):
        other = self.field.coerce(other)
        product = dup_mul(self.rep, other.rep, QQ)
        return FieldElement(self.field, _reduce(product, self.field.modulus))

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        if self.is_zero:
            raise ZeroDivisionError("Division by zero in Q(beta)")
        if len(self.rep) == 1:
            return FieldElement(self.field, [QQ(1) / self.rep[0]])
        try:
            return FieldElement(self.field, dup_invert(self.rep, self.field.modulus, QQ))
        except NotInvertible:
            # unreachable for an irreducible modulus
            raise ZeroDivisionError("Residue is a zero divisor")

    def __truediv__(self, other):
        return self * self.field.coerce(other).inverse()

    def __rtruediv__(self, other):
        return self.field.coerce(other) * self.inverse()

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = self.field.one
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return other.field is self.field and self.rep == other.rep
        try:
            return self.rep == self.field.coerce(other).rep
        except InvalidArgumentException:
            return NotImplemented

    def __hash__(self):
        return hash(tuple(self.rep))

    def __lt__(self, other):
        return compare(self, self.field.coerce(other)) < 0

    def __le__(self, other):
        return compare(self, self.field.coerce(other)) <= 0

    def __gt__(self, other):
        return compare(self, self.field.coerce(other)) > 0

    def __ge__(self, other):
        return compare(self, self.field.coerce(other)) >= 0

    def __repr__(self):
        return f"FieldElement({to_expression(self)})"

    def __str__(self):
        return to_expression(self)


def make_field(
    p: IntPolynomial,
    hint: Optional[Tuple] = None,
    precision_limit: Optional[int] = None,
    spec: Optional[str] = None,
) -> AlgebraicField:
    """
    Build Q(beta) for the unique root beta of p in (1, 2), or in the hint.

    The stored minimal polynomial is the irreducible factor of p vanishing at
    beta. Roots on the boundary 1 or 2 do not count.

    Raises:
        InvalidArgumentException: constant p or malformed hint
        NoRootException: no root in range
        AmbiguousRootException: several roots in range
    """
    if p.is_zero or p.degree < 1:
        raise InvalidArgumentException(f"Polynomial must be nonconstant, got {p.to_text() or '0'}")
    limit = precision_limit if precision_limit is not None else get_settings().PRECISION_LIMIT

    inf, sup = ROOT_RANGE
    if hint is not None:
        h_lo, h_hi = to_qq(hint[0]), to_qq(hint[1])
        if h_lo > h_hi:
            raise InvalidArgumentException(f"Empty hint interval [{hint[0]}, {hint[1]}]")
        inf, sup = max(inf, h_lo), min(sup, h_hi)
        if inf > sup:
            raise InvalidArgumentException(
                f"Hint interval [{hint[0]}, {hint[1]}] does not meet (1, 2)"
            )

    _, factors = factor_list(p.to_poly())
    candidates = []
    for factor, _multiplicity in factors:
        factor = Poly(factor, X)
        if factor.degree() < 1:
            continue
        if factor.LC() < 0:
            factor = -factor
        if factor.degree() == 1:
            # isolating boxes of a linear factor may span the whole range
            c1, c0 = (QQ.from_sympy(c) for c in factor.all_coeffs())
            root = -c0 / c1
            if 1 < root < 2 and inf <= root <= sup:
                candidates.append((IntPolynomial.from_poly(factor), root, root))
            continue
        for (s, t), _ in factor.intervals(inf=QQ.to_sympy(inf), sup=QQ.to_sympy(sup)):
            candidates.append((IntPolynomial.from_poly(factor), QQ.from_sympy(s), QQ.from_sympy(t)))

    if not candidates:
        raise NoRootException(f"{p} has no root in ({inf}, {sup}) within (1, 2)")
    if len(candidates) > 1:
        raise AmbiguousRootException(
            f"{p} has {len(candidates)} roots in ({inf}, {sup}); pass an isolating hint"
        )

    minpoly, lo, hi = candidates[0]
    field = AlgebraicField(minpoly, lo, hi, limit, source=p, spec=spec)
    if not field.is_rational:
        _tighten_into_range(field)
    logger.debug(f"Built field {field!r}")
    return field


def _tighten_into_range(field: AlgebraicField) -> None:
    """Bisect until 1 < lo < hi < 2."""
    while True:
        lo, hi = field.interval
        if lo > 1 and hi < 2:
            return
        if not field.bisect():
            raise PrecisionExceededException("Could not separate beta from the range boundary")


def _enclosure(elem: FieldElement) -> Interval:
    """Rational interval containing elem(beta), using 0 < lo <= beta <= hi."""
    lo, hi = elem.field.interval
    low = high = QQ(0)
    lo_pow = hi_pow = QQ(1)
    for c in reversed(elem.rep):
        if c:
            a, b = c * lo_pow, c * hi_pow
            if a <= b:
                low, high = low + a, high + b
            else:
                low, high = low + b, high + a
        lo_pow *= lo
        hi_pow *= hi
    return low, high


def sign(elem: FieldElement) -> int:
    """Exact sign of elem(beta)."""
    value = elem.as_rational()
    if value is not None:
        return (value > 0) - (value < 0)

    refined = False
    while True:
        low, high = _enclosure(elem)
        if low > 0 or high < 0:
            comparisons_total.labels(resolution="refined" if refined else "interval").inc()
            return 1 if low > 0 else -1
        if not elem.field.bisect():
            raise UndecidableComparisonException(
                f"Sign of {to_expression(elem)} undecided after "
                f"{elem.field.refinement_steps} refinements"
            )
        refined = True


def compare(a: FieldElement, b: FieldElement) -> int:
    """Total order on Q(beta): -1, 0 or +1."""
    return sign(a - b)


def refine(elem: FieldElement, width) -> Interval:
    """
    Rational interval of length at most width containing elem(beta).

    Raises:
        PrecisionExceededException: width below 2^-precision_limit, or the
            limit is reached before the enclosure is narrow enough
    """
    field = elem.field
    width = to_qq(width)
    if width <= 0 or width < QQ(1, 2 ** field.precision_limit):
        raise PrecisionExceededException(
            f"Requested width {width} is below 2^-{field.precision_limit}"
        )
    value = elem.as_rational()
    if value is not None:
        return value, value
    while True:
        low, high = _enclosure(elem)
        if high - low <= width:
            return low, high
        if not field.bisect():
            raise PrecisionExceededException(
                f"Precision limit reached before width {width}"
            )


def to_expression(elem: FieldElement) -> str:
    """Residue written as a polynomial in beta, e.g. ``beta**2 - beta - 1``."""
    if elem.is_zero:
        return "0"
    if len(elem.rep) == 1:
        return str(QQ.to_sympy(elem.rep[0]))
    return str(Poly.from_list(elem.rep, BETA, domain=QQ).as_expr())


def to_decimal(elem: FieldElement, digits: Optional[int] = None) -> str:
    """Decimal approximation of elem(beta) with the given significant digits."""
    digits = digits or get_settings().DECIMAL_DIGITS
    low, high = refine(elem, QQ(1, 10 ** (digits + 3)))
    mid = (low + high) / 2
    with mpmath.workdps(digits + 10):
        value = mpmath.mpf(int(QQ.numer(mid))) / int(QQ.denom(mid))
        return mpmath.nstr(value, digits)

"""
Exact checks on the orbit of 1 under S: the alternating closed form of S^k 1,
the position of S^k 1 relative to the fixed points x_s < x_l, and the full
interleaving of the orbit points.
"""
import logging
from dataclasses import dataclass, field as dataclass_field
from functools import cmp_to_key
from typing import List, Optional, Tuple

from app.core.metrics import track_analysis
from app.exceptions import HypothesisException, InvalidArgumentException, RangeException
from app.services.algebra import (
    AlgebraicField,
    BetaClass,
    FieldElement,
    classify_beta,
    compare,
    evaluate,
    multinacci_poly,
    sign,
)
from app.services.algebra.polynomial import IntPolynomial
from app.services.dynamics.maps import Orientation, fixed_points, make_map, orbit_of_one

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OrderCheck:
    left: str
    relation: str
    right: str
    holds: bool


@dataclass
class FixedPointBoundsResult:
    n: int
    checks: List[OrderCheck] = dataclass_field(default_factory=list)
    equality: bool = False

    @property
    def holds(self) -> bool:
        return all(check.holds for check in self.checks)


@dataclass
class OrbitOrderResult:
    beta_class: BetaClass
    chain: List[str]
    checks: List[OrderCheck]
    permutation: List[int]

    @property
    def holds(self) -> bool:
        return all(check.holds for check in self.checks)


def s_closed_form_coeffs(k: int) -> Tuple[int, ...]:
    """
    Ascending integer coefficients of the formal iterate
    P_0 = 1, P_{j+1} = c_j - x P_j with c_j = 2 for even j and 1 for odd j.
    """
    coeffs = [1]
    for j in range(k):
        shifted = [0] + [-c for c in coeffs]
        shifted[0] = 2 if j % 2 == 0 else 1
        coeffs = shifted
    return tuple(coeffs)


def closed_form_range(beta_class: BetaClass) -> range:
    """Iterates k for which S^k 1 follows the alternating closed form."""
    if beta_class.is_exact:
        return range(1, beta_class.n)
    if beta_class.is_gap:
        return range(1, beta_class.n - 1)
    return range(1, 1)


def s_closed_form(field: AlgebraicField, k: int, beta_class: Optional[BetaClass] = None) -> FieldElement:
    """
    S^k 1 as the alternating polynomial in beta, e.g. 2 - beta for k = 1 and
    beta^2 - 2 beta + 1 for k = 2.

    Raises:
        RangeException: k outside 1..n-1 (Exact(n)) or 1..n-2 (Gap(n));
            always in SubGolden
    """
    beta_class = beta_class or classify_beta(field)
    valid = closed_form_range(beta_class)
    if k not in valid:
        raise RangeException(
            f"Closed form of S^{k} 1 is not asserted for {beta_class} "
            f"(valid k: {list(valid) or 'none'})"
        )
    return evaluate(IntPolynomial(s_closed_form_coeffs(k)), field)


def _check(left: str, a: FieldElement, relation: str, right: str, b: FieldElement) -> OrderCheck:
    c = compare(a, b)
    holds = {"<": c < 0, "<=": c <= 0, "=": c == 0, ">": c > 0, ">=": c >= 0}[relation]
    return OrderCheck(left, relation, right, holds)


@track_analysis("verify_fixed_point_bounds")
def verify_fixed_point_bounds(field: AlgebraicField, n: int) -> FixedPointBoundsResult:
    """
    For beta >= beta_n: S^k 1 > x_l for even k and S^k 1 < x_s for odd k in
    1..n-2, S^{n-1} 1 >= x_l (n odd) or <= x_s (n even), with equality
    exactly when beta = beta_n.

    Raises:
        InvalidArgumentException: n < 2
        HypothesisException: beta < beta_n
    """
    if n < 2:
        raise InvalidArgumentException(f"Fixed-point bounds need n >= 2, got {n}")
    if sign(evaluate(multinacci_poly(n), field)) < 0:
        raise HypothesisException(f"beta is below the {n}-th multinacci number")

    s_map = make_map(field, Orientation.NEGATIVE)
    orbit = orbit_of_one(s_map, n - 1)
    x_s, x_l = fixed_points(s_map)

    result = FixedPointBoundsResult(n=n)
    for k in range(1, n - 1):
        if k % 2 == 0:
            result.checks.append(_check(f"S^{k}1", orbit[k], ">", "x_l", x_l))
        else:
            result.checks.append(_check(f"S^{k}1", orbit[k], "<", "x_s", x_s))

    last = orbit[n - 1]
    if n % 2 == 1:
        result.checks.append(_check(f"S^{n - 1}1", last, ">=", "x_l", x_l))
        result.equality = last == x_l
    else:
        result.checks.append(_check(f"S^{n - 1}1", last, "<=", "x_s", x_s))
        result.equality = last == x_s

    logger.info(
        "Fixed-point bounds checked",
        extra={"n": n, "holds": result.holds, "equality": result.equality},
    )
    return result


def _expected_chain(field: AlgebraicField, beta_class: BetaClass):
    """Labeled points in the order they must appear, with the relation between neighbours."""
    s_map = make_map(field, Orientation.NEGATIVE)
    x_s, x_l = fixed_points(s_map)
    n = beta_class.n

    if beta_class.is_subgolden:
        orbit = orbit_of_one(s_map, 1)
        points = [("x_s", x_s), ("S^1 1", orbit[1]), ("1/beta", field.inv_beta)]
        return points, ["<", "<"], orbit

    orbit = orbit_of_one(s_map, n - 1)
    odd = [k for k in range(1, n - 1) if k % 2 == 1]
    even = [k for k in range(n - 2, 0, -1) if k % 2 == 0]

    points = [("0", field.zero)] + [(f"S^{k} 1", orbit[k]) for k in odd]
    middle = (f"S^{n - 1} 1", orbit[n - 1])
    if beta_class.is_exact and n % 2 == 0:
        points += [middle, ("x_s", x_s), ("x_l", x_l)]
        tail_relations = ["=", "<"]
    elif beta_class.is_exact:
        points += [("x_s", x_s), ("x_l", x_l), middle]
        tail_relations = ["<", "="]
    else:
        points += [("x_s", x_s), middle, ("x_l", x_l)]
        tail_relations = ["<", "<"]
    points += [(f"S^{k} 1", orbit[k]) for k in even] + [("1", field.one)]

    relations = ["<"] * (len(odd) + 1) + tail_relations + ["<"] * (len(even) + 1)
    return points, relations, orbit


@track_analysis("orbit_order")
def orbit_order_check(field: AlgebraicField, beta_class: Optional[BetaClass] = None) -> OrbitOrderResult:
    """
    Exact interleaving of the S-orbit of 1 around the fixed points:

        0 < S1 < S^3 1 < ... < x_s <= S^{n-1} 1 <= x_l < ... < S^4 1 < S^2 1 < 1

    for Gap(n) (both inequalities strict) and Exact(n) (S^{n-1} 1 equal to
    x_s or x_l by parity). SubGolden checks x_s < S1 < 1/beta.
    """
    beta_class = beta_class or classify_beta(field)
    points, relations, orbit = _expected_chain(field, beta_class)

    checks = [
        _check(left[0], left[1], relation, right[0], right[1])
        for left, right, relation in zip(points, points[1:], relations)
    ]
    indices = list(range(len(orbit.points)))
    permutation = sorted(indices, key=cmp_to_key(lambda i, j: compare(orbit[i], orbit[j])))

    return OrbitOrderResult(
        beta_class=beta_class,
        chain=[label for label, _ in points],
        checks=checks,
        permutation=permutation,
    )


@dataclass(frozen=True)
class ClosedFormRow:
    k: int
    closed_form: FieldElement
    iterate: FieldElement

    @property
    def holds(self) -> bool:
        return self.closed_form == self.iterate


def verify_closed_form(field: AlgebraicField, beta_class: Optional[BetaClass] = None) -> List[ClosedFormRow]:
    """Closed form of S^k 1 against the iterated orbit over its whole valid range."""
    beta_class = beta_class or classify_beta(field)
    valid = closed_form_range(beta_class)
    if not valid:
        raise RangeException(f"No closed-form iterates for {beta_class}")
    orbit = orbit_of_one(make_map(field, Orientation.NEGATIVE), valid[-1])
    return [ClosedFormRow(k, s_closed_form(field, k, beta_class), orbit[k]) for k in valid]

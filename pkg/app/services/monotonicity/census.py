"""
Counts of intervals of monotonicity by type.

kappa_j(m) counts the type-j branches of T^m, iota_j(m) those of S^m. Below the
critical iterate n both follow fixed closed forms; at m = n the S-side counts
depend on where S^(n-1) 1 falls relative to 1/beta.
"""
import logging
from dataclasses import dataclass, field as dataclass_field
from typing import List, Optional

from app.core.metrics import track_analysis
from app.exceptions import InvalidArgumentException, WrongRegimeException
from app.services.algebra import AlgebraicField, BetaClass, classify_beta, compare
from app.services.dynamics.maps import Orientation, make_map, orbit_of_one
from app.services.monotonicity.decomposition import assign_types, decompose_iterates

logger = logging.getLogger(__name__)

CRITICAL_CASES = ("1", "2", "3", "1*", "2*", "3*")


def kappa_closed(j: int, m: int, n: int) -> int:
    """
    Type-j branch count of T^m for beta_{n-1} < beta < beta_n.

    m < n:  2^(m-1-j) for j < m, 1 for j = m.
    m = n:  2^(n-1) - 1 for j = 0, 2^(n-1-j) for 1 <= j <= n-1, 1 for j = n.
    Zero for every other j.
    """
    if n < 2 or m < 1 or m > n:
        raise InvalidArgumentException(f"kappa needs 1 <= m <= n and n >= 2, got m={m}, n={n}")
    if j < 0 or j > m:
        return 0
    if j == m:
        return 1
    if m < n:
        return 2 ** (m - 1 - j)
    if j == 0:
        return 2 ** (n - 1) - 1
    return 2 ** (n - 1 - j)


def iota_closed(j: int, m: int) -> int:
    """Type-j branch count of S^m for m below the critical iterate."""
    if m < 1:
        raise InvalidArgumentException(f"iota needs m >= 1, got {m}")
    if j < 0 or j > m:
        return 0
    if m == 1:
        return 1
    if m == 2:
        return (1, 2, 1)[j]
    if j == 0:
        return 2 ** (m - 2)
    if j == m:
        return 1
    if j == m - 1:
        return 2
    return 3 * 2 ** (m - 2 - j)


def iota_n_closed(case: str, j: int, n: int) -> int:
    """
    Type-j branch count of S^n at the critical iterate.

    Unstarred cases belong to even n, starred ones to odd n. The number is the
    position of S^(n-1) 1 relative to 1/beta: 1 below, 2 equal, 3 above.
    """
    if case not in CRITICAL_CASES:
        raise InvalidArgumentException(f"Unknown case {case!r}, expected one of {CRITICAL_CASES}")
    if n < 3:
        raise InvalidArgumentException(f"Critical-iterate counts need n >= 3, got {n}")
    starred = case.endswith("*")
    if starred != (n % 2 == 1):
        raise InvalidArgumentException(f"Case ({case}) does not apply to n = {n}")
    if j < 0 or j > n:
        return 0

    if j == n:
        return 0 if case in ("2", "2*") else 1
    if j == 0:
        return 2 ** (n - 2) - 1 if case == "1*" else 2 ** (n - 2)
    if j == n - 1:
        return 2
    if j == 1 and case == "3":
        return 3 * 2 ** (n - 3) - 1
    return 3 * 2 ** (n - 2 - j)


def critical_case(field: AlgebraicField, n: int) -> str:
    """Case label from the exact position of S^(n-1) 1 against 1/beta."""
    if n < 3:
        raise InvalidArgumentException(f"Case analysis needs n >= 3, got {n}")
    orbit = orbit_of_one(make_map(field, Orientation.NEGATIVE), n - 1)
    position = compare(orbit[n - 1], field.inv_beta)
    label = {-1: "1", 0: "2", 1: "3"}[position]
    return label + ("*" if n % 2 == 1 else "")


@dataclass(frozen=True)
class CensusRow:
    map: str
    m: int
    j: int
    observed: int
    expected: int

    @property
    def matches(self) -> bool:
        return self.observed == self.expected


@dataclass
class CensusResult:
    beta_class: BetaClass
    n: int
    case: Optional[str]
    rows: List[CensusRow] = dataclass_field(default_factory=list)

    @property
    def holds(self) -> bool:
        return all(row.matches for row in self.rows)

    def mismatches(self) -> List[CensusRow]:
        return [row for row in self.rows if not row.matches]


@track_analysis("census")
def census(field: AlgebraicField, n: Optional[int] = None) -> CensusResult:
    """
    Compare observed type counts of T^m and S^m, 1 <= m <= n, with the closed
    forms. n defaults to the class index (2 for SubGolden).

    Raises:
        WrongRegimeException: beta is a multinacci number
    """
    beta_class = classify_beta(field)
    if beta_class.is_exact:
        raise WrongRegimeException(f"Type census applies to non-multinacci beta, got {beta_class}")
    n = n if n is not None else beta_class.n
    if n < 1:
        raise InvalidArgumentException(f"Iterate must be at least 1, got {n}")
    if n > beta_class.n:
        raise InvalidArgumentException(f"Closed forms hold up to m = {beta_class.n}, asked for {n}")
    case = critical_case(field, n) if n >= 3 and n == beta_class.n else None

    result = CensusResult(beta_class=beta_class, n=n, case=case)
    for orientation in (Orientation.POSITIVE, Orientation.NEGATIVE):
        pl_map = make_map(field, orientation)
        for decomposition in decompose_iterates(pl_map, n):
            m = decomposition.n
            counts = assign_types(decomposition).type_counts()
            for j in sorted(set(range(m + 1)) | set(counts)):
                if orientation == Orientation.POSITIVE:
                    expected = kappa_closed(j, m, beta_class.n)
                elif m == beta_class.n and m >= 3:
                    expected = iota_n_closed(case, j, m)
                else:
                    expected = iota_closed(j, m)
                result.rows.append(
                    CensusRow(pl_map.name, m, j, counts.get(j, 0), expected)
                )

    logger.info(
        "Census finished",
        extra={"beta_class": str(beta_class), "n": n, "holds": result.holds},
    )
    return result

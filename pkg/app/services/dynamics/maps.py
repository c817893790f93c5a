"""
The positive and negative beta-transformations on [0, 1].

    T x = beta x        on [0, 1/beta)      S x = 1 - beta x    on [0, 1/beta)
          beta x - 1    on [1/beta, 1]            2 - beta x    on [1/beta, 1]

The branch point 1/beta belongs to the second branch, so T(1/beta) = 0 and
S(1/beta) = 1. T(1) = beta - 1.
"""
import logging
from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Tuple

from app.exceptions import DomainException, InvalidArgumentException
from app.services.algebra import AlgebraicField, FieldElement, to_decimal, to_expression

logger = logging.getLogger(__name__)


class Orientation(str, Enum):
    POSITIVE = "T"
    NEGATIVE = "S"

    @classmethod
    def parse(cls, name: str) -> "Orientation":
        key = name.strip().upper()
        if key in ("T", "POSITIVE", "+"):
            return cls.POSITIVE
        if key in ("S", "NEGATIVE", "-"):
            return cls.NEGATIVE
        raise InvalidArgumentException(f"Unknown map {name!r}, expected T or S")


@dataclass(frozen=True)
class Branch:
    """x -> slope * x + intercept on [left, right) (closed at 1 for the last branch)."""
    left: FieldElement
    right: FieldElement
    slope: FieldElement
    intercept: FieldElement

    def __call__(self, x: FieldElement) -> FieldElement:
        return self.slope * x + self.intercept


@dataclass(frozen=True)
class PLMap:
    field: AlgebraicField
    orientation: Orientation
    branches: Tuple[Branch, Branch]

    @property
    def name(self) -> str:
        return self.orientation.value

    @property
    def critical(self) -> FieldElement:
        return self.field.inv_beta

    @property
    def sign(self) -> int:
        """Sign of the slope on every branch."""
        return 1 if self.orientation == Orientation.POSITIVE else -1

    def branch_index(self, x: FieldElement) -> int:
        return 0 if x < self.critical else 1


@dataclass(frozen=True)
class OrbitTable:
    map: PLMap
    points: Tuple[FieldElement, ...]

    @property
    def depth(self) -> int:
        return len(self.points) - 1

    def __getitem__(self, k: int) -> FieldElement:
        return self.points[k]


def make_map(field: AlgebraicField, orientation: Orientation) -> PLMap:
    beta, inv = field.beta, field.inv_beta
    zero, one = field.zero, field.one
    if orientation == Orientation.POSITIVE:
        branches = (
            Branch(zero, inv, beta, zero),
            Branch(inv, one, beta, field.from_rational(-1)),
        )
    else:
        branches = (
            Branch(zero, inv, -beta, one),
            Branch(inv, one, -beta, field.from_rational(2)),
        )
    return PLMap(field, orientation, branches)


def apply(pl_map: PLMap, x: FieldElement) -> FieldElement:
    """Image of x under the branch containing it."""
    x = pl_map.field.coerce(x)
    if x < 0 or x > 1:
        raise DomainException(f"{to_expression(x)} lies outside [0, 1]")
    return pl_map.branches[pl_map.branch_index(x)](x)


def orbit_of_one(pl_map: PLMap, depth: int) -> OrbitTable:
    if depth < 0:
        raise InvalidArgumentException(f"Orbit depth must be nonnegative, got {depth}")
    points = [pl_map.field.one]
    for _ in range(depth):
        points.append(apply(pl_map, points[-1]))
    return OrbitTable(pl_map, tuple(points))


def fixed_points(pl_map: PLMap) -> List[FieldElement]:
    """
    Solutions of slope * x + intercept = x lying in their own branch.

    T: only 0.  S: x_s = 1/(beta+1) and x_l = 2/(beta+1).
    """
    points = []
    last = len(pl_map.branches) - 1
    for i, branch in enumerate(pl_map.branches):
        x = branch.intercept / (pl_map.field.one - branch.slope)
        upper_ok = x <= branch.right if i == last else x < branch.right
        if x >= branch.left and upper_ok:
            points.append(x)
    return points


def preimages(pl_map: PLMap, x: FieldElement) -> List[FieldElement]:
    """All y in [0, 1] with F(y) = x, in increasing order."""
    x = pl_map.field.coerce(x)
    if x < 0 or x > 1:
        raise DomainException(f"{to_expression(x)} lies outside [0, 1]")
    result = []
    last = len(pl_map.branches) - 1
    for i, branch in enumerate(pl_map.branches):
        y = (x - branch.intercept) / branch.slope
        upper_ok = y <= branch.right if i == last else y < branch.right
        if y >= branch.left and upper_ok:
            result.append(y)
    return result


def orbit_rows(table: OrbitTable, digits: Optional[int] = None) -> List[Tuple[int, str, str]]:
    """(k, exact residue, decimal) for every orbit point."""
    return [
        (k, to_expression(point), to_decimal(point, digits))
        for k, point in enumerate(table.points)
    ]

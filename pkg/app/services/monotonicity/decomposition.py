"""
Intervals of monotonicity of F^n for F = T or S.

Every branch of F^n is x -> s * beta^n * x + c on an open domain. The branches
of F^(m+1) come from those of F^m by pulling back the critical point 1/beta:
a branch whose image strictly contains 1/beta is split in two.
"""
import logging
from dataclasses import dataclass, replace
from typing import Dict, Iterator, List, Optional, Tuple

from app.core.config import get_settings
from app.core.metrics import branches_enumerated_total, track_analysis
from app.exceptions import BranchBudgetException, ClassificationException, InvalidArgumentException
from app.services.algebra import FieldElement, compare, to_expression
from app.services.dynamics.maps import Orientation, PLMap, orbit_of_one

logger = logging.getLogger(__name__)

OpenInterval = Tuple[FieldElement, FieldElement]


@dataclass(frozen=True)
class MonotoneBranch:
    """F^n = sign * beta^n * x + intercept on the open domain."""
    domain: OpenInterval
    sign: int
    intercept: FieldElement
    image: OpenInterval
    type_id: Optional[int] = None

    @property
    def length(self) -> FieldElement:
        return self.domain[1] - self.domain[0]


@dataclass(frozen=True)
class BranchDecomposition:
    map: PLMap
    n: int
    branches: Tuple[MonotoneBranch, ...]

    def __len__(self) -> int:
        return len(self.branches)

    def type_counts(self) -> Dict[int, int]:
        counts: Dict[int, int] = {}
        for branch in self.branches:
            if branch.type_id is None:
                raise ClassificationException("Branch types have not been assigned")
            counts[branch.type_id] = counts.get(branch.type_id, 0) + 1
        return counts


def _check_budget(n: int) -> None:
    if n < 1:
        raise InvalidArgumentException(f"Iterate must be at least 1, got {n}")
    max_iterate = get_settings().MAX_ITERATE
    if n > max_iterate:
        raise BranchBudgetException(
            f"F^{n} may have 2^{n} branches; the configured maximum iterate is {max_iterate}"
        )


def _push(pl_map: PLMap, lo: FieldElement, hi: FieldElement, branch_index: int) -> OpenInterval:
    """Image of the open interval (lo, hi) under one branch formula of F."""
    branch = pl_map.branches[branch_index]
    a, b = branch(lo), branch(hi)
    return (a, b) if pl_map.sign > 0 else (b, a)


def _refine_level(
    pl_map: PLMap, branches: List[MonotoneBranch], inv_power: FieldElement
) -> List[MonotoneBranch]:
    """Branches of F^(m+1) from those of F^m; inv_power is beta^-m."""
    critical = pl_map.critical
    beta = pl_map.field.beta
    sigma = pl_map.sign
    refined: List[MonotoneBranch] = []

    for branch in branches:
        lo, hi = branch.image
        d_lo, d_hi = branch.domain
        left_of = compare(hi, critical) <= 0
        right_of = compare(lo, critical) >= 0

        if left_of or right_of:
            index = 0 if left_of else 1
            intercept = sigma * beta * branch.intercept + pl_map.branches[index].intercept
            refined.append(
                MonotoneBranch(
                    domain=branch.domain,
                    sign=sigma * branch.sign,
                    intercept=intercept,
                    image=_push(pl_map, lo, hi, index),
                )
            )
            continue

        # F^m x* = 1/beta
        cut = (critical - branch.intercept) * inv_power * branch.sign
        lower = (lo, critical)
        upper = (critical, hi)
        if branch.sign > 0:
            pieces = [((d_lo, cut), lower, 0), ((cut, d_hi), upper, 1)]
        else:
            pieces = [((d_lo, cut), upper, 1), ((cut, d_hi), lower, 0)]

        for domain, (u, v), index in pieces:
            intercept = sigma * beta * branch.intercept + pl_map.branches[index].intercept
            refined.append(
                MonotoneBranch(
                    domain=domain,
                    sign=sigma * branch.sign,
                    intercept=intercept,
                    image=_push(pl_map, u, v, index),
                )
            )
    return refined


def decompose_iterates(pl_map: PLMap, n: int) -> Iterator[BranchDecomposition]:
    """Decompositions of F^1, ..., F^n, built in one pass."""
    _check_budget(n)
    field = pl_map.field
    branches = [
        MonotoneBranch(domain=(field.zero, field.one), sign=1, intercept=field.zero,
                       image=(field.zero, field.one))
    ]
    inv_power = field.one
    for m in range(1, n + 1):
        branches = _refine_level(pl_map, branches, inv_power)
        inv_power = inv_power * field.inv_beta
        branches_enumerated_total.labels(orientation=pl_map.name).inc(len(branches))
        logger.debug(f"{pl_map.name}^{m}: {len(branches)} branches")
        yield BranchDecomposition(pl_map, m, tuple(branches))


@track_analysis("decompose")
def decompose(pl_map: PLMap, n: int) -> BranchDecomposition:
    """
    Intervals of monotonicity of F^n in domain order.

    Raises:
        BranchBudgetException: n above the configured maximum iterate
    """
    decomposition = None
    for decomposition in decompose_iterates(pl_map, n):
        pass
    return decomposition


def _orbit_lookup(pl_map: PLMap, depth: int) -> Dict[Tuple, List[int]]:
    orbit = orbit_of_one(pl_map, depth)
    lookup: Dict[Tuple, List[int]] = {}
    for j, point in enumerate(orbit.points):
        lookup.setdefault(tuple(point.rep), []).append(j)
    return lookup


def _positive_type(image: OpenInterval, lookup) -> Optional[int]:
    lo, hi = image
    if not lo.is_zero:
        return None
    matches = lookup.get(tuple(hi.rep))
    return matches[0] if matches else None


def _negative_type(image: OpenInterval, lookup, n: int, s_one: FieldElement, s_n: FieldElement) -> Optional[int]:
    lo, hi = image
    if lo.is_zero and hi == 1:
        return 0
    if hi == 1:
        odd = [j for j in lookup.get(tuple(lo.rep), []) if j % 2 == 1]
        return odd[0] if odd else None
    if lo.is_zero:
        even = [j for j in lookup.get(tuple(hi.rep), []) if j % 2 == 0 and j > 0]
        return even[0] if even else None
    if lo == s_one and hi == s_n:
        return n
    return None


def assign_types(decomposition: BranchDecomposition) -> BranchDecomposition:
    """
    Label every branch by the shape of its image.

    T: type j when the image is (0, T^j 1), smallest such j.
    S: type 0 for (0, 1), odd j for (S^j 1, 1), even j for (0, S^j 1) and
    type n for the image (S1, S^n 1).

    Raises:
        ClassificationException: an image of no expected shape
    """
    pl_map = decomposition.map
    n = decomposition.n
    lookup = _orbit_lookup(pl_map, n)
    orbit = orbit_of_one(pl_map, n)

    typed = []
    for branch in decomposition.branches:
        if pl_map.orientation == Orientation.POSITIVE:
            type_id = _positive_type(branch.image, lookup)
        else:
            type_id = _negative_type(branch.image, lookup, n, orbit[1], orbit[n])
        if type_id is None:
            lo, hi = branch.image
            raise ClassificationException(
                f"{pl_map.name}^{n} branch image ({to_expression(lo)}, {to_expression(hi)}) "
                f"matches no interval type"
            )
        typed.append(replace(branch, type_id=type_id))
    return replace(decomposition, branches=tuple(typed))

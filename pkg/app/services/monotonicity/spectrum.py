"""
Preimage-count spectra psi_n(x) = #{y : F^n y = x} as step functions, their
level sets, the parity profile of the T-side spectrum, and an independent
counting oracle.
"""
import logging
from dataclasses import dataclass, field as dataclass_field
from functools import cmp_to_key
from typing import Dict, List, Optional, Tuple

from app.core.metrics import track_analysis
from app.exceptions import InvalidArgumentException, WrongRegimeException
from app.services.algebra import FieldElement, classify_beta, compare, to_decimal, to_expression
from app.services.dynamics.maps import Orientation, PLMap, orbit_of_one, preimages
from app.services.monotonicity.decomposition import BranchDecomposition

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PreimageSpectrum:
    """values[i] is psi_n on the open cell (breakpoints[i], breakpoints[i+1])."""
    map: PLMap
    n: int
    breakpoints: Tuple[FieldElement, ...]
    values: Tuple[int, ...]

    def cells(self):
        for i, value in enumerate(self.values):
            yield self.breakpoints[i], self.breakpoints[i + 1], value

    @property
    def maximum(self) -> int:
        return max(self.values)

    @property
    def minimum(self) -> int:
        return min(self.values)


@dataclass(frozen=True)
class LevelSet:
    k: int
    cells: Tuple[Tuple[FieldElement, FieldElement], ...]
    length: FieldElement


@track_analysis("preimage_spectrum")
def preimage_spectrum(decomposition: BranchDecomposition) -> PreimageSpectrum:
    """Covering count of the branch images on every cell between image endpoints."""
    field = decomposition.map.field
    unique: Dict[Tuple, FieldElement] = {(): field.zero, tuple(field.one.rep): field.one}
    for branch in decomposition.branches:
        for endpoint in branch.image:
            unique.setdefault(tuple(endpoint.rep), endpoint)

    breakpoints = sorted(unique.values(), key=cmp_to_key(compare))
    position = {tuple(point.rep): i for i, point in enumerate(breakpoints)}

    # difference array over cells
    delta = [0] * len(breakpoints)
    for branch in decomposition.branches:
        lo, hi = branch.image
        delta[position[tuple(lo.rep)]] += 1
        delta[position[tuple(hi.rep)]] -= 1

    values = []
    running = 0
    for i in range(len(breakpoints) - 1):
        running += delta[i]
        values.append(running)

    return PreimageSpectrum(decomposition.map, decomposition.n, tuple(breakpoints), tuple(values))


def level_set(spectrum: PreimageSpectrum, k: int) -> LevelSet:
    """Open cells where psi_n = k and their exact total length."""
    if k < 0:
        raise InvalidArgumentException(f"Level must be nonnegative, got {k}")
    cells = tuple((lo, hi) for lo, hi, value in spectrum.cells() if value == k)
    length = spectrum.map.field.zero
    for lo, hi in cells:
        length = length + (hi - lo)
    return LevelSet(k, cells, length)


def mass(spectrum: PreimageSpectrum) -> FieldElement:
    """Sum of value * cell length; equals beta^n."""
    total = spectrum.map.field.zero
    for lo, hi, value in spectrum.cells():
        total = total + (hi - lo) * value
    return total


def value_at(spectrum: PreimageSpectrum, x: FieldElement) -> Optional[int]:
    """psi_n(x) for x inside a cell; None when x is a breakpoint or outside (0, 1)."""
    points = spectrum.breakpoints
    lo, hi = 0, len(points)
    while lo < hi:
        mid = (lo + hi) // 2
        c = compare(points[mid], x)
        if c == 0:
            return None
        if c < 0:
            lo = mid + 1
        else:
            hi = mid
    if lo == 0 or lo == len(points):
        return None
    return spectrum.values[lo - 1]


def count_preimages(pl_map: PLMap, n: int, x: FieldElement) -> int:
    """#{y in [0, 1] : F^n y = x} by recursive inverse-branch enumeration."""
    if n < 0:
        raise InvalidArgumentException(f"Iterate must be nonnegative, got {n}")
    level = [pl_map.field.coerce(x)]
    for _ in range(n):
        level = [y for point in level for y in preimages(pl_map, point)]
    return len(level)


@dataclass(frozen=True)
class CellParity:
    left: str
    right: str
    value: int
    expected: str
    holds: bool


@dataclass
class ParityResult:
    n: int
    maximum: int
    minimum: int
    cells: List[CellParity] = dataclass_field(default_factory=list)
    odd_below_even: bool = True
    maximum_on_first_cell: bool = True

    @property
    def holds(self) -> bool:
        return (
            all(cell.holds for cell in self.cells)
            and self.odd_below_even
            and self.maximum_on_first_cell
        )


@track_analysis("parity_profile")
def parity_profile(spectrum: PreimageSpectrum, n: int) -> ParityResult:
    """
    psi_n^+ is even on (T^(n-1) 1, T^n 1) and odd elsewhere; odd values other
    than the maximum 2^n - 1 lie below every even value.

    Raises:
        WrongRegimeException: not a T-spectrum at the critical iterate of Gap(n), n >= 4
    """
    if spectrum.map.orientation != Orientation.POSITIVE:
        raise WrongRegimeException("Parity profile is defined for the positive map")
    beta_class = classify_beta(spectrum.map.field)
    if not beta_class.is_gap or beta_class.n != n or n < 4 or spectrum.n != n:
        raise WrongRegimeException(f"Parity profile needs Gap(n), n >= 4 at iterate n; got {beta_class}")

    orbit = orbit_of_one(spectrum.map, n)
    left_edge, right_edge = orbit[n - 1], orbit[n]

    result = ParityResult(n=n, maximum=spectrum.maximum, minimum=spectrum.minimum)
    for lo, hi, value in spectrum.cells():
        inside = compare(lo, left_edge) >= 0 and compare(hi, right_edge) <= 0
        expected = "even" if inside else "odd"
        result.cells.append(
            CellParity(
                left=to_expression(lo),
                right=to_expression(hi),
                value=value,
                expected=expected,
                holds=(value % 2 == 0) == inside,
            )
        )

    top = 2 ** n - 1
    odd = [v for v in spectrum.values if v % 2 == 1 and v != top]
    even = [v for v in spectrum.values if v % 2 == 0]
    if odd and even:
        result.odd_below_even = max(odd) < min(even)
    result.maximum_on_first_cell = spectrum.values[0] == top == spectrum.maximum
    return result


def spectrum_rows(spectrum: PreimageSpectrum, digits: Optional[int] = None) -> List[Tuple[str, str, int, str, str]]:
    """(left decimal, right decimal, value, left exact, right exact) per cell."""
    return [
        (to_decimal(lo, digits), to_decimal(hi, digits), value, to_expression(lo), to_expression(hi))
        for lo, hi, value in spectrum.cells()
    ]

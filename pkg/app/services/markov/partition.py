"""
Markov partitions of T and S built from a finite orbit of 1.

A partition is Markov when the image of every state (split at 1/beta when
1/beta lies inside it) has its endpoints among the cut points, so the image is
a union of states.
"""
import logging
from dataclasses import dataclass, field as dataclass_field
from functools import cmp_to_key
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple

from app.core.config import get_settings
from app.core.metrics import track_analysis
from app.exceptions import InvalidArgumentException, NotMarkovException
from app.services.algebra import FieldElement, classify_beta, compare, to_expression
from app.services.dynamics.maps import Orientation, PLMap, apply, fixed_points, orbit_of_one

logger = logging.getLogger(__name__)

OpenInterval = Tuple[FieldElement, FieldElement]


def _key(point: FieldElement) -> Tuple:
    return tuple(point.rep)


@dataclass(frozen=True)
class MarkovPartition:
    map: PLMap
    cut_points: Tuple[FieldElement, ...]
    extra_points: Tuple[str, ...] = ()

    @property
    def states(self) -> List[OpenInterval]:
        """States in left-to-right order."""
        return list(zip(self.cut_points, self.cut_points[1:]))

    @property
    def size(self) -> int:
        return len(self.cut_points) - 1

    def index_of(self, point: FieldElement) -> Optional[int]:
        for i, cut in enumerate(self.cut_points):
            if cut == point:
                return i
        return None


@dataclass(frozen=True)
class TransitionMatrix:
    matrix: Tuple[Tuple[int, ...], ...]
    states: Tuple[OpenInterval, ...]
    scheme: str

    @property
    def size(self) -> int:
        return len(self.matrix)

    def as_lists(self) -> List[List[int]]:
        return [list(row) for row in self.matrix]


def state_pieces(pl_map: PLMap, state: OpenInterval) -> List[Tuple[OpenInterval, int]]:
    """Subintervals of a state on which F is one affine branch, with the branch index."""
    lo, hi = state
    critical = pl_map.critical
    if compare(lo, critical) < 0 < compare(hi, critical):
        return [((lo, critical), 0), ((critical, hi), 1)]
    return [(state, 0 if compare(hi, critical) <= 0 else 1)]


def piece_image(pl_map: PLMap, piece: OpenInterval, index: int) -> OpenInterval:
    branch = pl_map.branches[index]
    a, b = branch(piece[0]), branch(piece[1])
    return (a, b) if pl_map.sign > 0 else (b, a)


def state_image(pl_map: PLMap, state: OpenInterval) -> List[OpenInterval]:
    return [piece_image(pl_map, piece, index) for piece, index in state_pieces(pl_map, state)]


def _is_markov(pl_map: PLMap, cut_points: Sequence[FieldElement]) -> bool:
    keys = {_key(point) for point in cut_points}
    for state in zip(cut_points, cut_points[1:]):
        for lo, hi in state_image(pl_map, state):
            if _key(lo) not in keys or _key(hi) not in keys:
                return False
    return True


def _sorted_unique(points: Sequence[FieldElement]) -> Tuple[FieldElement, ...]:
    unique: Dict[Tuple, FieldElement] = {}
    for point in points:
        unique.setdefault(_key(point), point)
    return tuple(sorted(unique.values(), key=cmp_to_key(compare)))


def closed_orbit(pl_map: PLMap, max_depth: int) -> Optional[List[FieldElement]]:
    """Distinct points of the orbit of 1 if it repeats within max_depth steps."""
    points = [pl_map.field.one]
    seen = {_key(points[0])}
    for _ in range(max_depth):
        image = apply(pl_map, points[-1])
        if _key(image) in seen:
            return points
        seen.add(_key(image))
        points.append(image)
    return None


@track_analysis("detect_markov")
def detect_markov(pl_map: PLMap, max_depth: Optional[int] = None) -> Optional[MarkovPartition]:
    """
    Markov partition from the orbit of 1 together with 0 and 1.

    If those cut points do not give the image property, 1/beta and then the
    fixed points are added. None when the orbit does not close within
    max_depth or no candidate works.
    """
    max_depth = max_depth if max_depth is not None else get_settings().MARKOV_MAX_DEPTH
    if max_depth < 1:
        raise InvalidArgumentException(f"Markov search depth must be at least 1, got {max_depth}")

    orbit = closed_orbit(pl_map, max_depth)
    if orbit is None:
        logger.debug(f"Orbit of 1 under {pl_map.name} does not close within {max_depth}")
        return None

    base = [pl_map.field.zero, pl_map.field.one] + orbit
    attempts = [
        ((), base),
        (("critical",), base + [pl_map.critical]),
        (("critical", "fixed"), base + [pl_map.critical] + fixed_points(pl_map)),
    ]
    for extras, points in attempts:
        cut_points = _sorted_unique(points)
        if _is_markov(pl_map, cut_points):
            return MarkovPartition(pl_map, cut_points, extras)
    return None


def multinacci_labeling(partition: MarkovPartition) -> Optional[List[OpenInterval]]:
    """
    State order E_1..E_n used for beta = beta_n.

    T: E_1 = (0, T^(n-1) 1), E_j between T^(n-j+1) 1 and T^(n-j) 1.
    S: E_1 between S^(n-1) 1 and S^(n-2) 1, E_j between S^(n-j-1) 1 and
    S^(n-j+1) 1 with S^(-1) 1 read as 0.

    None when beta is not multinacci or the partition is not the orbit one.
    """
    pl_map = partition.map
    beta_class = classify_beta(pl_map.field)
    n = beta_class.n
    if not beta_class.is_exact or partition.size != n:
        return None

    orbit = orbit_of_one(pl_map, n)
    zero = pl_map.field.zero

    def point(k: int) -> FieldElement:
        return zero if k < 0 else orbit[k]

    if pl_map.orientation == Orientation.POSITIVE:
        spans = [(zero, orbit[n - 1])] + [(orbit[n - j + 1], orbit[n - j]) for j in range(2, n + 1)]
    else:
        spans = [(orbit[n - 1], orbit[n - 2])] + [
            (point(n - j - 1), point(n - j + 1)) for j in range(2, n + 1)
        ]

    states = {(_key(lo), _key(hi)): (lo, hi) for lo, hi in partition.states}
    labeling = []
    for a, b in spans:
        lo, hi = (a, b) if compare(a, b) < 0 else (b, a)
        state = states.get((_key(lo), _key(hi)))
        if state is None:
            return None
        labeling.append(state)
    return labeling


@track_analysis("transition_matrix")
def transition_matrix(
    partition: MarkovPartition, labeling: Optional[Sequence[OpenInterval]] = None
) -> TransitionMatrix:
    """
    M_jk = 1 iff E_k lies in F(E_j).

    Without a labeling the multinacci scheme is used when it applies, the
    left-to-right order otherwise.

    Raises:
        InvalidArgumentException: labeling is not a permutation of the states
        NotMarkovException: some image is not a union of states
    """
    pl_map = partition.map
    position = {_key(point): i for i, point in enumerate(partition.cut_points)}

    if labeling is None:
        labeling = multinacci_labeling(partition)
        scheme = "multinacci" if labeling is not None else "positional"
        if labeling is None:
            labeling = partition.states
    else:
        scheme = "custom"

    indices = []
    for lo, hi in labeling:
        i, j = position.get(_key(lo)), position.get(_key(hi))
        if i is None or j is None or j != i + 1:
            raise InvalidArgumentException(
                f"({to_expression(lo)}, {to_expression(hi)}) is not a partition state"
            )
        indices.append((i, j))
    if len(set(indices)) != partition.size or len(indices) != partition.size:
        raise InvalidArgumentException("Labeling must list every state exactly once")

    rows = []
    for state in labeling:
        covered = []
        for lo, hi in state_image(pl_map, state):
            a, b = position.get(_key(lo)), position.get(_key(hi))
            if a is None or b is None:
                raise NotMarkovException(
                    f"Image ({to_expression(lo)}, {to_expression(hi)}) of a state "
                    f"is not a union of states"
                )
            covered.append((a, b))
        rows.append(tuple(
            1 if any(a <= i and j <= b for a, b in covered) else 0
            for i, j in indices
        ))

    return TransitionMatrix(tuple(rows), tuple(labeling), scheme)


@dataclass
class CodingResult:
    depth: int
    admissible: Dict[int, int] = dataclass_field(default_factory=dict)
    cells: int = 0
    nonempty: bool = True
    single_intervals: bool = True
    tiles: bool = True
    shift_compatible: bool = True
    forbidden_empty: bool = True

    @property
    def holds(self) -> bool:
        return (
            self.nonempty and self.single_intervals and self.tiles
            and self.shift_compatible and self.forbidden_empty
            and self.cells == self.admissible.get(self.depth, 0)
        )


def _pull_back(pl_map: PLMap, state: OpenInterval, target: List[OpenInterval]) -> List[OpenInterval]:
    """Points of the state whose image lies in the target intervals."""
    result = []
    for (p_lo, p_hi), index in state_pieces(pl_map, state):
        branch = pl_map.branches[index]
        for u, v in target:
            a = (u - branch.intercept) / branch.slope
            b = (v - branch.intercept) / branch.slope
            if pl_map.sign < 0:
                a, b = b, a
            lo = p_lo if compare(a, p_lo) < 0 else a
            hi = p_hi if compare(b, p_hi) > 0 else b
            if compare(lo, hi) < 0:
                result.append((lo, hi))
    return sorted(result, key=cmp_to_key(lambda s, t: compare(s[0], t[0])))


def _admissible(matrix: Sequence[Sequence[int]], length: int) -> List[Tuple[int, ...]]:
    words = [(i,) for i in range(len(matrix))]
    for _ in range(length - 1):
        words = [w + (j,) for w in words for j in range(len(matrix)) if matrix[w[-1]][j]]
    return words


@track_analysis("coding_check")
def coding_check(partition: MarkovPartition, transitions: TransitionMatrix, depth: Optional[int] = None) -> CodingResult:
    """
    Admissible words of length <= depth against cells of the depth-refinement.

    cell(w) is the set of x with F^(i-1) x in E_(w_i). Every admissible word
    must give one nonempty interval, the top-level cells must tile [0, 1],
    F(cell(w)) must contain cell(shift w), and forbidden pairs give no cell.
    """
    depth = depth if depth is not None else get_settings().CODING_DEPTH
    if depth < 1:
        raise InvalidArgumentException(f"Coding depth must be at least 1, got {depth}")
    pl_map = partition.map
    states = list(transitions.states)
    matrix = transitions.matrix
    result = CodingResult(depth=depth)

    cells: Dict[Tuple[int, ...], List[OpenInterval]] = {(i,): [state] for i, state in enumerate(states)}
    for length in range(1, depth + 1):
        words = _admissible(matrix, length)
        result.admissible[length] = len(words)
        if length > 1:
            for word in words:
                cells[word] = _pull_back(pl_map, states[word[0]], cells[word[1:]])
        for word in words:
            if not cells[word]:
                result.nonempty = False
            if len(cells[word]) != 1:
                result.single_intervals = False

    top = [cells[w][0] for w in _admissible(matrix, depth) if len(cells[w]) == 1]
    result.cells = len(top)
    top.sort(key=cmp_to_key(lambda s, t: compare(s[0], t[0])))
    field = pl_map.field
    total = sum((hi - lo for lo, hi in top), field.zero)
    disjoint = all(compare(a[1], b[0]) <= 0 for a, b in zip(top, top[1:]))
    result.tiles = disjoint and total == field.one

    if depth > 1:
        for word in _admissible(matrix, depth):
            if len(cells[word]) != 1:
                continue
            images = state_image(pl_map, cells[word][0])
            for lo, hi in cells[word[1:]]:
                if not any(compare(u, lo) <= 0 and compare(hi, v) <= 0 for u, v in images):
                    result.shift_compatible = False

    for i, j in product(range(len(states)), repeat=2):
        if not matrix[i][j] and _pull_back(pl_map, states[i], [states[j]]):
            result.forbidden_empty = False

    return result

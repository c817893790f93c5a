"""
Isomorphism certificate for a multinacci beta.

T and S both admit Markov partitions from the orbit of 1; under the multinacci
labelings the two transition matrices coincide and satisfy the Markov-shift
conditions, so both maps are isomorphic to the same Markov shift with its
maximal-entropy measure.
"""
import logging
from dataclasses import dataclass
from itertools import permutations
from typing import List, Optional, Sequence, Tuple

from app.core.config import get_settings
from app.core.metrics import track_analysis
from app.exceptions import (
    CertificateException,
    InconclusiveException,
    NotMarkovException,
    WrongRegimeException,
)
from app.services.algebra import AlgebraicField, classify_beta
from app.services.dynamics.maps import Orientation, make_map
from app.services.markov.measure import EntropyEnclosure, R1Result, check_r1, entropy, parry_measure
from app.services.markov.partition import (
    MarkovPartition,
    TransitionMatrix,
    detect_markov,
    transition_matrix,
)

logger = logging.getLogger(__name__)

# itertools.permutations over more states than this is not worth it
PERMUTATION_SEARCH_LIMIT = 8


@dataclass
class Certificate:
    n: int
    partition_T: MarkovPartition
    partition_S: MarkovPartition
    matrix_T: TransitionMatrix
    matrix_S: TransitionMatrix
    r1_T: R1Result
    r1_S: R1Result
    matrices_equal: bool
    # relabeling of S-states that turns matrix_S into matrix_T, 0-based
    permutation: Optional[Tuple[int, ...]] = None
    entropy: Optional[EntropyEnclosure] = None

    @property
    def matrix(self) -> List[List[int]]:
        return self.matrix_T.as_lists()


def find_permutation(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> Optional[Tuple[int, ...]]:
    """sigma with b[sigma i][sigma j] == a[i][j] for all i, j, or None."""
    size = len(a)
    if size != len(b) or size > PERMUTATION_SEARCH_LIMIT:
        return None
    for sigma in permutations(range(size)):
        if all(b[sigma[i]][sigma[j]] == a[i][j] for i in range(size) for j in range(size)):
            return sigma
    return None


def _side(
    field: AlgebraicField, orientation: Orientation, max_depth: int
) -> Tuple[MarkovPartition, TransitionMatrix]:
    pl_map = make_map(field, orientation)
    partition = detect_markov(pl_map, max_depth)
    if partition is None:
        raise InconclusiveException(
            f"No Markov partition for {pl_map.name} within orbit depth {max_depth}"
        )
    try:
        return partition, transition_matrix(partition)
    except NotMarkovException as e:
        raise CertificateException(f"{pl_map.name}: {e}") from e


@track_analysis("certify_isomorphism")
def certify_isomorphism(field: AlgebraicField, max_depth: Optional[int] = None) -> Certificate:
    """
    Build and check the Markov certificate.

    Raises:
        WrongRegimeException: beta is not multinacci
        InconclusiveException: an orbit of 1 does not close within max_depth
            (default MARKOV_MAX_DEPTH)
        CertificateException: a partition lacks the image property, the
            matrices differ or a matrix fails the Markov-shift conditions
    """
    beta_class = classify_beta(field)
    if not beta_class.is_exact:
        raise WrongRegimeException(f"Markov certificate needs a multinacci beta, got {beta_class}")
    n = beta_class.n

    max_depth = max_depth if max_depth is not None else get_settings().MARKOV_MAX_DEPTH
    partition_T, matrix_T = _side(field, Orientation.POSITIVE, max_depth)
    partition_S, matrix_S = _side(field, Orientation.NEGATIVE, max_depth)

    equal = matrix_T.matrix == matrix_S.matrix
    permutation = None
    if not equal:
        permutation = find_permutation(matrix_T.matrix, matrix_S.matrix)
        logger.warning(
            f"Default labelings disagree at {beta_class}",
            extra={"matrix_T": matrix_T.as_lists(), "matrix_S": matrix_S.as_lists(),
                   "permutation": permutation},
        )

    r1_T = check_r1(matrix_T.matrix, field)
    r1_S = check_r1(matrix_S.matrix, field)

    certificate = Certificate(
        n=n,
        partition_T=partition_T,
        partition_S=partition_S,
        matrix_T=matrix_T,
        matrix_S=matrix_S,
        r1_T=r1_T,
        r1_S=r1_S,
        matrices_equal=equal,
        permutation=permutation,
    )

    if not equal and permutation is None:
        raise CertificateException(f"Transition matrices of T and S are not equivalent at {beta_class}")
    if not r1_T.holds or not r1_S.holds:
        failures = r1_T.failures() + r1_S.failures()
        raise CertificateException(f"Markov-shift conditions fail at {beta_class}: {failures}")
    if not equal:
        raise CertificateException(
            f"Transition matrices agree only up to the relabeling {permutation} at {beta_class}"
        )

    certificate.entropy = entropy(parry_measure(matrix_T.matrix, field))

    logger.info(f"Certified {beta_class} with {n} states")
    return certificate

"""
Conditions on a 0/1 transition matrix and its maximal-entropy Markov measure.

Everything here is exact in Q(beta) except the entropy, which is returned as a
rigorous mpmath interval enclosure with exact binary endpoints.
"""
import logging
from dataclasses import dataclass, field as dataclass_field
from decimal import ROUND_CEILING, ROUND_FLOOR, Decimal, localcontext
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import numpy as np
from mpmath import iv
from mpmath.libmp import to_rational
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components
from sympy import Matrix, Poly, Rational
from sympy.polys.domains import QQ

from app.core.config import get_settings
from app.core.metrics import track_analysis
from app.exceptions import CertificateException, InvalidArgumentException, PrecisionExceededException
from app.services.algebra import AlgebraicField, FieldElement, refine, sign, to_fraction, to_qq
from app.services.algebra.polynomial import X

logger = logging.getLogger(__name__)

IV_PRECISION = 160


@dataclass
class R1Result:
    irreducible: bool
    contiguous: bool
    spectral_radius_ok: bool
    charpoly_divisible: bool = False
    positive_eigenvector: bool = False
    noncontiguous_rows: List[int] = dataclass_field(default_factory=list)
    eigenvector: Optional[List[FieldElement]] = None

    @property
    def holds(self) -> bool:
        return self.irreducible and self.contiguous and self.spectral_radius_ok

    def failures(self) -> List[str]:
        failed = []
        if not self.irreducible:
            failed.append("transition graph is not strongly connected")
        if not self.contiguous:
            failed.append(f"rows {self.noncontiguous_rows} have separated 1's")
        if not self.charpoly_divisible:
            failed.append("minimal polynomial of beta does not divide the characteristic polynomial")
        if not self.positive_eigenvector:
            failed.append("no strictly positive eigenvector for beta")
        return failed


def _validate_square(matrix: Sequence[Sequence[int]]) -> None:
    size = len(matrix)
    if size == 0 or any(len(row) != size for row in matrix):
        raise InvalidArgumentException("Transition matrix must be square and nonempty")
    if any(entry not in (0, 1) for row in matrix for entry in row):
        raise InvalidArgumentException("Transition matrix must have 0/1 entries")


def is_irreducible(matrix: Sequence[Sequence[int]]) -> bool:
    graph = csr_matrix(np.array(matrix, dtype=np.int8))
    count, _ = connected_components(graph, directed=True, connection="strong")
    return count == 1


def noncontiguous_rows(matrix: Sequence[Sequence[int]]) -> List[int]:
    """1-based rows whose 1's are separated by 0's (or that have none)."""
    bad = []
    for i, row in enumerate(matrix, start=1):
        ones = [j for j, entry in enumerate(row) if entry]
        if not ones or ones[-1] - ones[0] + 1 != len(ones):
            bad.append(i)
    return bad


def _companion(field: AlgebraicField) -> List[List[Rational]]:
    """Multiplication by beta on ascending coefficient vectors of residues."""
    coeffs = field.minpoly.coeffs
    degree, leading = field.degree, coeffs[-1]
    rows = [[Rational(0)] * degree for _ in range(degree)]
    for i in range(degree):
        if i + 1 < degree:
            rows[i + 1][i] = Rational(1)
        rows[i][degree - 1] = Rational(-coeffs[i], leading)
    return rows


def shifted_over_q(matrix: Sequence[Sequence[int]], field: AlgebraicField) -> Matrix:
    """
    M - beta I as a rational matrix acting on Q(beta)^size = Q^(size * degree),
    state i occupying coordinates i*degree .. i*degree + degree - 1.
    """
    degree = field.degree
    companion = _companion(field)
    size = len(matrix)
    rows = [[Rational(0)] * (size * degree) for _ in range(size * degree)]
    for i in range(size):
        for j in range(size):
            for a in range(degree):
                for b in range(degree):
                    entry = Rational(matrix[i][j]) if a == b else Rational(0)
                    if i == j:
                        entry -= companion[a][b]
                    rows[i * degree + a][j * degree + b] = entry
    return Matrix(rows)


def eigenvector(matrix: Sequence[Sequence[int]], field: AlgebraicField) -> Optional[List[FieldElement]]:
    """A nonzero solution of M v = beta v over Q(beta), or None."""
    basis = shifted_over_q(matrix, field).nullspace()
    if not basis:
        return None
    column, degree = basis[0], field.degree
    return [
        field.element([column[i * degree + a] for a in range(degree)])
        for i in range(len(matrix))
    ]


def positive_eigenvector(
    matrix: Sequence[Sequence[int]], field: AlgebraicField
) -> Optional[List[FieldElement]]:
    """Eigenvector of M for beta scaled to be positive, or None."""
    vector = eigenvector(matrix, field)
    if vector is None:
        return None
    signs = [sign(entry) for entry in vector]
    if all(s < 0 for s in signs):
        return [-entry for entry in vector]
    if all(s > 0 for s in signs):
        return vector
    return None


@track_analysis("check_r1")
def check_r1(matrix: Sequence[Sequence[int]], field: AlgebraicField) -> R1Result:
    """
    Irreducibility, contiguity of the 1's in every row, and spectral radius
    beta. The last one is certified by the minimal polynomial of beta dividing
    the characteristic polynomial together with a strictly positive
    eigenvector for beta (Perron-Frobenius).
    """
    _validate_square(matrix)
    bad_rows = noncontiguous_rows(matrix)

    charpoly = Matrix(matrix).charpoly(X).as_expr()
    remainder = Poly(charpoly, X, domain=QQ).rem(Poly(field.minpoly.to_poly(), X, domain=QQ))
    divisible = remainder.is_zero
    eigenvector = positive_eigenvector(matrix, field) if divisible else None

    result = R1Result(
        irreducible=is_irreducible(matrix),
        contiguous=not bad_rows,
        spectral_radius_ok=divisible and eigenvector is not None,
        charpoly_divisible=divisible,
        positive_eigenvector=eigenvector is not None,
        noncontiguous_rows=bad_rows,
        eigenvector=eigenvector,
    )
    if not result.holds:
        logger.info(f"Matrix fails r1: {result.failures()}")
    return result


@dataclass
class MarkovMeasure:
    field: AlgebraicField
    matrix: Tuple[Tuple[int, ...], ...]
    P: List[List[FieldElement]]
    q: List[FieldElement]
    right: List[FieldElement]
    left: List[FieldElement]

    @property
    def size(self) -> int:
        return len(self.q)


def push_forward(q: Sequence[FieldElement], P: Sequence[Sequence[FieldElement]]) -> List[FieldElement]:
    """Distribution q P after one step of the chain."""
    zero = q[0].field.zero
    return [sum((q[i] * P[i][j] for i in range(len(q))), zero) for j in range(len(P[0]))]


@track_analysis("parry_measure")
def parry_measure(matrix: Sequence[Sequence[int]], field: AlgebraicField) -> MarkovMeasure:
    """
    P_ij = M_ij v_j / (beta v_i), q_i = u_i v_i / sum_k u_k v_k with v, u the
    positive right and left eigenvectors for beta.

    Raises:
        CertificateException: no positive eigenvectors, or P is not
            stochastic, or q is not stationary
    """
    _validate_square(matrix)
    right = positive_eigenvector(matrix, field)
    left = positive_eigenvector([list(column) for column in zip(*matrix)], field)
    if right is None or left is None:
        raise CertificateException("Matrix has no positive eigenvectors for beta")

    beta = field.beta
    size = len(matrix)
    P = [
        [
            right[j] / (beta * right[i]) if matrix[i][j] else field.zero
            for j in range(size)
        ]
        for i in range(size)
    ]
    weights = [u * v for u, v in zip(left, right)]
    total = sum(weights, field.zero)
    q = [w / total for w in weights]

    for i, row in enumerate(P, start=1):
        if sum(row, field.zero) != field.one:
            raise CertificateException(f"Row {i} of P does not sum to 1")
    if push_forward(q, P) != q:
        raise CertificateException("q is not stationary for P")

    return MarkovMeasure(
        field=field,
        matrix=tuple(tuple(row) for row in matrix),
        P=P,
        q=q,
        right=right,
        left=left,
    )


@dataclass(frozen=True)
class EntropyEnclosure:
    """Exact binary endpoints of the interval enclosures."""
    lo: Fraction
    hi: Fraction
    log_beta_lo: Fraction
    log_beta_hi: Fraction
    contains_log_beta: bool

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo


def _endpoints(interval) -> Tuple[Fraction, Fraction]:
    lo, hi = interval._mpi_
    return Fraction(*to_rational(lo)), Fraction(*to_rational(hi))


def directed_decimal(value: Fraction, digits: int, upward: bool) -> str:
    """value rounded to digits significant digits towards +inf or -inf."""
    with localcontext() as ctx:
        ctx.prec = digits
        ctx.rounding = ROUND_CEILING if upward else ROUND_FLOOR
        return str(Decimal(value.numerator) / Decimal(value.denominator))


def _interval(elem: FieldElement, width) -> "iv.mpf":
    lo, hi = refine(elem, width)
    lo_iv = iv.mpf(int(QQ.numer(lo))) / int(QQ.denom(lo))
    hi_iv = iv.mpf(int(QQ.numer(hi))) / int(QQ.denom(hi))
    return iv.mpf([lo_iv, hi_iv])


@track_analysis("entropy")
def entropy(measure: MarkovMeasure, width=None) -> EntropyEnclosure:
    """
    Enclosure of -sum_i q_i sum_j P_ij log P_ij, compared against log beta.

    Raises:
        PrecisionExceededException: the enclosure cannot be made narrow enough
    """
    width = to_qq(width if width is not None else get_settings().ENTROPY_WIDTH)
    element_width = width * QQ(1, 10 ** 20)
    saved = iv.prec
    try:
        iv.prec = IV_PRECISION
        for _ in range(4):
            total = iv.mpf(0)
            for i in range(measure.size):
                q_i = _interval(measure.q[i], element_width)
                for j in range(measure.size):
                    if measure.P[i][j].is_zero:
                        continue
                    p_ij = _interval(measure.P[i][j], element_width)
                    total -= q_i * p_ij * iv.ln(p_ij)
            log_beta = iv.ln(_interval(measure.field.beta, element_width))

            lo, hi = _endpoints(total)
            if hi - lo <= to_fraction(width):
                log_lo, log_hi = _endpoints(log_beta)
                return EntropyEnclosure(
                    lo=lo,
                    hi=hi,
                    log_beta_lo=log_lo,
                    log_beta_hi=log_hi,
                    contains_log_beta=not (hi < log_lo or log_hi < lo),
                )
            element_width = element_width * QQ(1, 10 ** 10)
            iv.prec = iv.prec * 2
    finally:
        iv.prec = saved
    raise PrecisionExceededException(f"Entropy enclosure wider than {width}")


def cylinder_measure(measure: MarkovMeasure, word: Sequence[int]) -> FieldElement:
    """q_{w1} P_{w1 w2} ... P_{w(k-1) wk} for 1-based state labels; 0 for forbidden words."""
    if not word:
        raise InvalidArgumentException("Cylinder word must be nonempty")
    if any(label < 1 or label > measure.size for label in word):
        raise InvalidArgumentException(f"Word {list(word)} uses states outside 1..{measure.size}")
    value = measure.q[word[0] - 1]
    for a, b in zip(word, word[1:]):
        if not measure.matrix[a - 1][b - 1]:
            return measure.field.zero
        value = value * measure.P[a - 1][b - 1]
    return value

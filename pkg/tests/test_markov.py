import math
from fractions import Fraction

import pytest

from app.exceptions import InconclusiveException, InvalidArgumentException, WrongRegimeException
from app.services.dynamics import Orientation, make_map
from app.services.markov import (
    certify_isomorphism,
    check_r1,
    coding_check,
    cylinder_measure,
    detect_markov,
    entropy,
    parry_measure,
    transition_matrix,
)
from app.services.markov.certificate import find_permutation
from app.services.markov.measure import directed_decimal, eigenvector, push_forward
from tests.conftest import multinacci

GOLDEN_MATRIX = [[1, 1], [1, 0]]


def multinacci_matrix(n):
    return [[1] * n] + [[1 if j == i - 1 else 0 for j in range(n)] for i in range(1, n)]


def markov_side(field, orientation):
    partition = detect_markov(make_map(field, orientation))
    return partition, transition_matrix(partition)


def test_no_partition_when_orbit_is_infinite(three_halves):
    assert detect_markov(make_map(three_halves, Orientation.POSITIVE), 50) is None
    with pytest.raises(InvalidArgumentException):
        detect_markov(make_map(three_halves, Orientation.POSITIVE), 0)


def test_golden_partitions(golden):
    beta = golden.beta
    t_partition, t_matrix = markov_side(golden, Orientation.POSITIVE)
    assert list(t_partition.cut_points) == [golden.zero, beta - 1, golden.one]
    assert t_partition.extra_points == ()
    assert t_matrix.scheme == "multinacci"
    assert t_matrix.as_lists() == GOLDEN_MATRIX

    # S 1 = 2 - beta is fixed
    s_partition, s_matrix = markov_side(golden, Orientation.NEGATIVE)
    assert list(s_partition.cut_points) == [golden.zero, 2 - beta, golden.one]
    assert s_matrix.as_lists() == GOLDEN_MATRIX


@pytest.mark.parametrize("n", range(2, 9))
def test_certificate(n):
    certificate = certify_isomorphism(multinacci(n))
    assert certificate.n == n
    assert certificate.matrices_equal
    assert certificate.permutation is None
    assert certificate.matrix == multinacci_matrix(n)
    assert certificate.r1_T.holds and certificate.r1_S.holds
    assert certificate.partition_T.size == certificate.partition_S.size == n


def test_certificate_needs_multinacci(three_halves):
    with pytest.raises(WrongRegimeException):
        certify_isomorphism(three_halves)


def test_custom_labeling(golden):
    partition, default = markov_side(golden, Orientation.POSITIVE)
    reversed_matrix = transition_matrix(partition, list(reversed(default.states)))
    assert reversed_matrix.scheme == "custom"
    assert reversed_matrix.as_lists() == [[0, 1], [1, 1]]
    assert find_permutation(default.matrix, reversed_matrix.matrix) == (1, 0)


def test_bad_labelings(golden):
    partition, default = markov_side(golden, Orientation.POSITIVE)
    with pytest.raises(InvalidArgumentException):
        transition_matrix(partition, [(golden.zero, golden.one)])
    with pytest.raises(InvalidArgumentException):
        transition_matrix(partition, [default.states[0], default.states[0]])


def test_find_permutation_of_inequivalent_matrices():
    assert find_permutation([[1, 1], [1, 1]], GOLDEN_MATRIX) is None
    assert find_permutation(GOLDEN_MATRIX, GOLDEN_MATRIX) == (0, 1)


@pytest.mark.parametrize("n", range(2, 6))
def test_coding_of_positive_map(n):
    partition, transitions = markov_side(multinacci(n), Orientation.POSITIVE)
    result = coding_check(partition, transitions)
    assert result.holds
    assert result.depth == 4
    assert result.cells == result.admissible[4]


def test_coding_of_golden_maps(golden):
    for orientation in Orientation:
        partition, transitions = markov_side(golden, orientation)
        result = coding_check(partition, transitions, depth=4)
        assert result.holds
        assert [result.admissible[k] for k in range(1, 5)] == [2, 3, 5, 8]


def test_coding_depth_must_be_positive(golden):
    partition, transitions = markov_side(golden, Orientation.POSITIVE)
    with pytest.raises(InvalidArgumentException):
        coding_check(partition, transitions, depth=0)


def test_r1_failures(golden):
    result = check_r1([[1, 0], [0, 1]], golden)
    assert not result.irreducible
    assert not result.charpoly_divisible
    assert not result.holds

    result = check_r1([[1, 0, 1], [1, 1, 0], [0, 1, 0]], golden)
    assert result.irreducible
    assert result.noncontiguous_rows == [1]
    assert not result.holds
    assert result.failures()


@pytest.mark.parametrize("matrix", [[], [[1, 0]], [[2, 0], [0, 1]]])
def test_r1_rejects_malformed_matrices(golden, matrix):
    with pytest.raises(InvalidArgumentException):
        check_r1(matrix, golden)


def test_parry_measure_of_golden_matrix(golden):
    beta = golden.beta
    measure = parry_measure(GOLDEN_MATRIX, golden)
    assert measure.P == [[1 / beta, beta ** -2], [golden.one, golden.zero]]
    square = beta * beta
    assert measure.q == [square / (square + 1), 1 / (square + 1)]


@pytest.mark.parametrize("n", range(2, 9))
def test_parry_measure_is_stationary(n):
    field = multinacci(n)
    measure = parry_measure(multinacci_matrix(n), field)
    assert push_forward(measure.q, measure.P) == measure.q
    assert sum(measure.q, field.zero) == field.one
    for row in measure.P:
        assert sum(row, field.zero) == field.one


@pytest.mark.parametrize("n", range(2, 9))
def test_entropy_is_log_beta(n):
    enclosure = entropy(parry_measure(multinacci_matrix(n), multinacci(n)))
    assert enclosure.contains_log_beta
    assert enclosure.width <= 1e-10


@pytest.mark.parametrize("n, value", [(2, 0.481212), (3, 0.609378)])
def test_entropy_values(n, value):
    enclosure = entropy(parry_measure(multinacci_matrix(n), multinacci(n)))
    assert math.isclose(enclosure.lo, value, abs_tol=1e-6)


def test_cylinder_measure(golden):
    beta = golden.beta
    measure = parry_measure(GOLDEN_MATRIX, golden)
    assert cylinder_measure(measure, [1, 2]) == 1 / (beta * beta + 1)
    assert cylinder_measure(measure, [2, 2]).is_zero
    with pytest.raises(InvalidArgumentException):
        cylinder_measure(measure, [3])
    with pytest.raises(InvalidArgumentException):
        cylinder_measure(measure, [])


def test_certificate_carries_entropy():
    certificate = certify_isomorphism(multinacci(3))
    assert certificate.entropy is not None
    assert certificate.entropy.contains_log_beta
    assert certificate.entropy.lo <= certificate.entropy.hi


def test_certificate_inconclusive_when_orbit_search_is_short():
    with pytest.raises(InconclusiveException):
        certify_isomorphism(multinacci(5), max_depth=1)


def test_eigenvector_over_the_field(golden, tribonacci, three_halves):
    beta = golden.beta
    v = eigenvector(GOLDEN_MATRIX, golden)
    # M v = beta v forces v_1 = beta v_2
    assert v[0] == beta * v[1]
    assert not v[1].is_zero

    w = eigenvector(multinacci_matrix(3), tribonacci)
    assert w[1] == tribonacci.beta * w[2]
    assert w[0] == tribonacci.beta * w[1]

    # 3/2 is not an eigenvalue of the golden matrix
    assert eigenvector(GOLDEN_MATRIX, three_halves) is None


def test_entropy_endpoints_are_exact(golden):
    enclosure = entropy(parry_measure(GOLDEN_MATRIX, golden))
    assert isinstance(enclosure.lo, Fraction)
    # log of the golden mean is 0.48121182505960...
    assert enclosure.lo <= Fraction(4812118250597, 10 ** 13)
    assert enclosure.hi >= Fraction(4812118250595, 10 ** 13)
    assert 0 <= enclosure.width <= Fraction(1, 10 ** 10)


def test_directed_decimal():
    third = Fraction(1, 3)
    assert directed_decimal(third, 5, upward=False) == "0.33333"
    assert directed_decimal(third, 5, upward=True) == "0.33334"
    assert directed_decimal(-third, 3, upward=False) == "-0.334"
    assert directed_decimal(Fraction(1, 2), 3, upward=True) == "0.5"

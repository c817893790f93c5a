import pytest

from app.core.config import get_settings
from app.exceptions import BranchBudgetException, ClassificationException, InvalidArgumentException
from app.services.dynamics import Orientation, make_map
from app.services.monotonicity import assign_types, decompose, decompose_iterates
from tests.conftest import GAP_SAMPLES, rational


@pytest.mark.parametrize("orientation", list(Orientation))
def test_domains_tile_unit_interval(nineteen_tenths, orientation):
    decomposition = decompose(make_map(nineteen_tenths, orientation), 4)
    branches = decomposition.branches
    assert branches[0].domain[0].is_zero
    assert branches[-1].domain[1] == nineteen_tenths.one
    for left, right in zip(branches, branches[1:]):
        assert left.domain[1] == right.domain[0]
    total = sum((b.length for b in branches), nineteen_tenths.zero)
    assert total == nineteen_tenths.one


def test_branch_counts_of_positive_map(nineteen_tenths):
    t_map = make_map(nineteen_tenths, Orientation.POSITIVE)
    counts = [len(d) for d in decompose_iterates(t_map, 4)]
    assert counts == [2, 4, 8, 15]


@pytest.mark.parametrize("n", [3, 5, 6])
def test_critical_iterate_loses_one_branch(n):
    t_map = make_map(rational(GAP_SAMPLES[n]), Orientation.POSITIVE)
    assert len(decompose(t_map, n)) == 2 ** n - 1


def test_branches_are_affine_with_slope_beta_power(seventeen_tenths):
    field = seventeen_tenths
    s_map = make_map(field, Orientation.NEGATIVE)
    decomposition = decompose(s_map, 3)
    slope = field.beta ** 3
    for branch in decomposition.branches:
        assert branch.sign == -1
        lo, hi = branch.domain
        image = (branch.intercept - slope * hi, branch.intercept - slope * lo)
        assert image == branch.image


def test_iterate_limits(golden):
    t_map = make_map(golden, Orientation.POSITIVE)
    with pytest.raises(InvalidArgumentException):
        decompose(t_map, 0)
    with pytest.raises(BranchBudgetException):
        decompose(t_map, get_settings().MAX_ITERATE + 1)


def test_types_of_positive_map(seventeen_tenths):
    decomposition = assign_types(decompose(make_map(seventeen_tenths, Orientation.POSITIVE), 2))
    # images (0, 1), (0, T1), (0, 1), (0, T^2 1)
    assert [b.type_id for b in decomposition.branches] == [0, 1, 0, 2]
    assert decomposition.type_counts() == {0: 2, 1: 1, 2: 1}


def test_types_of_negative_map(seventeen_tenths):
    decomposition = assign_types(decompose(make_map(seventeen_tenths, Orientation.NEGATIVE), 2))
    # images (S1, 1), (0, 1), (S1, 1), (0, S^2 1)
    assert [b.type_id for b in decomposition.branches] == [1, 0, 1, 2]
    assert decomposition.type_counts() == {0: 1, 1: 2, 2: 1}


def test_type_counts_need_types(seventeen_tenths):
    decomposition = decompose(make_map(seventeen_tenths, Orientation.POSITIVE), 2)
    with pytest.raises(ClassificationException):
        decomposition.type_counts()

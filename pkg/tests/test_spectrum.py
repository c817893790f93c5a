from fractions import Fraction

import numpy as np
import pytest

from app.exceptions import InvalidArgumentException, WrongRegimeException
from app.services.algebra import to_fraction
from app.services.dynamics import Orientation, make_map
from app.services.monotonicity import (
    count_preimages,
    decompose,
    level_set,
    mass,
    parity_profile,
    preimage_spectrum,
    value_at,
)
from tests.conftest import GAP_SAMPLES, rational

SAMPLE_DENOMINATOR = 1_000_003


def spectrum_of(field, orientation, n):
    return preimage_spectrum(decompose(make_map(field, orientation), n))


@pytest.mark.parametrize(
    "orientation, n, values",
    [
        (Orientation.POSITIVE, 1, (2, 1)),
        (Orientation.POSITIVE, 2, (4, 3, 2)),
        (Orientation.NEGATIVE, 1, (1, 2)),
        (Orientation.NEGATIVE, 2, (2, 4, 3)),
    ],
)
def test_small_spectra(seventeen_tenths, orientation, n, values):
    assert spectrum_of(seventeen_tenths, orientation, n).values == values


def test_positive_spectrum_below_golden_mean(three_halves):
    spectrum = spectrum_of(three_halves, Orientation.POSITIVE, 3)
    assert [to_fraction(p) for p in spectrum.breakpoints] == [
        Fraction(0), Fraction(1, 8), Fraction(1, 2), Fraction(3, 4), Fraction(1)
    ]
    assert spectrum.values == (5, 4, 3, 2)
    assert to_fraction(level_set(spectrum, 2).length) == Fraction(1, 4)
    assert to_fraction(mass(spectrum)) == Fraction(27, 8)


def test_negative_spectrum_below_golden_mean(three_halves):
    spectrum = spectrum_of(three_halves, Orientation.NEGATIVE, 3)
    assert [to_fraction(p) for p in spectrum.breakpoints] == [
        Fraction(0), Fraction(1, 4), Fraction(1, 2), Fraction(5, 8), Fraction(1)
    ]
    assert spectrum.values == (3, 1, 4, 5)
    empty = level_set(spectrum, 2)
    assert empty.cells == ()
    assert empty.length.is_zero


@pytest.mark.parametrize("orientation", list(Orientation))
@pytest.mark.parametrize("value", ["3/2", "17/10", "19/10", "39/20"])
def test_mass_is_beta_power(orientation, value):
    field = rational(value)
    for n in (1, 2, 3, 4):
        assert mass(spectrum_of(field, orientation, n)) == field.beta ** n


@pytest.mark.parametrize("value", [GAP_SAMPLES[n] for n in (3, 4, 5, 6)])
def test_positive_spectrum_is_nonincreasing(value):
    field = rational(value)
    values = spectrum_of(field, Orientation.POSITIVE, 4).values
    assert all(a >= b for a, b in zip(values, values[1:]))


def test_level_set_rejects_negative_level(three_halves):
    with pytest.raises(InvalidArgumentException):
        level_set(spectrum_of(three_halves, Orientation.POSITIVE, 1), -1)


def test_value_at(three_halves):
    spectrum = spectrum_of(three_halves, Orientation.POSITIVE, 3)
    field = three_halves
    assert value_at(spectrum, field.from_rational(Fraction(1, 16))) == 5
    assert value_at(spectrum, field.from_rational(Fraction(9, 10))) == 2
    assert value_at(spectrum, field.from_rational(Fraction(1, 2))) is None
    assert value_at(spectrum, field.zero) is None


@pytest.mark.parametrize("orientation", list(Orientation))
@pytest.mark.parametrize("n", [3, 4])
@pytest.mark.parametrize("value", ["3/2", "17/10", "19/10"])
def test_spectrum_agrees_with_preimage_count(orientation, n, value):
    field = rational(value)
    pl_map = make_map(field, orientation)
    spectrum = preimage_spectrum(decompose(pl_map, n))
    rng = np.random.default_rng(20 * n + len(value))
    checked = 0
    for numerator in rng.integers(1, SAMPLE_DENOMINATOR, size=1000):
        x = field.from_rational(Fraction(int(numerator), SAMPLE_DENOMINATOR))
        expected = value_at(spectrum, x)
        if expected is None:
            continue
        assert count_preimages(pl_map, n, x) == expected
        checked += 1
    assert checked >= 990


def test_count_preimages_rejects_negative_iterate(golden):
    with pytest.raises(InvalidArgumentException):
        count_preimages(make_map(golden, Orientation.POSITIVE), -1, golden.zero)


def test_parity_profile(nineteen_tenths):
    spectrum = spectrum_of(nineteen_tenths, Orientation.POSITIVE, 4)
    result = parity_profile(spectrum, 4)
    assert result.holds
    assert result.maximum == 15
    assert spectrum.values[0] == 15
    assert any(cell.expected == "even" for cell in result.cells)


@pytest.mark.parametrize("n", [5, 6])
def test_parity_profile_in_higher_gaps(n):
    spectrum = spectrum_of(rational(GAP_SAMPLES[n]), Orientation.POSITIVE, n)
    assert parity_profile(spectrum, n).holds


def test_parity_profile_regime(nineteen_tenths, seventeen_tenths):
    with pytest.raises(WrongRegimeException):
        parity_profile(spectrum_of(nineteen_tenths, Orientation.NEGATIVE, 4), 4)
    with pytest.raises(WrongRegimeException):
        parity_profile(spectrum_of(seventeen_tenths, Orientation.POSITIVE, 3), 3)
    with pytest.raises(WrongRegimeException):
        parity_profile(spectrum_of(nineteen_tenths, Orientation.POSITIVE, 3), 3)


def test_negative_spectrum_maximum(nineteen_tenths):
    # 4 images (0, 1), 6 of (S1, 1), 3 of (0, S^2 1), 2 of (S^3 1, 1) overlap above S^3 1
    spectrum = spectrum_of(nineteen_tenths, Orientation.NEGATIVE, 4)
    assert spectrum.maximum == 15


@pytest.mark.parametrize("orientation", list(Orientation))
@pytest.mark.parametrize("n", sorted(GAP_SAMPLES))
def test_every_gap_sample_at_critical_iterate(orientation, n):
    field = rational(GAP_SAMPLES[n])
    spectrum = spectrum_of(field, orientation, n)
    assert spectrum.maximum == 2 ** n - 1
    assert mass(spectrum) == field.beta ** n
    if orientation == Orientation.POSITIVE:
        assert spectrum.values[0] == 2 ** n - 1
        assert all(a >= b for a, b in zip(spectrum.values, spectrum.values[1:]))


def test_even_boundary_case(fourth_gap_boundary):
    # S^3 1 = 1/beta exactly
    spectrum = spectrum_of(fourth_gap_boundary, Orientation.NEGATIVE, 4)
    assert spectrum.maximum == 15
    assert mass(spectrum) == fourth_gap_boundary.beta ** 4

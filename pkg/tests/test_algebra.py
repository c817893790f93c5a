from fractions import Fraction

import pytest
from sympy.polys.domains import QQ

from app.exceptions import (
    AmbiguousRootException,
    InvalidArgumentException,
    NoRootException,
    PrecisionExceededException,
    UndecidableComparisonException,
)
from app.services.algebra import (
    BetaRegime,
    IntPolynomial,
    classify_beta,
    compare,
    compare_beta_with,
    make_field,
    multinacci_poly,
    parse_beta,
    refine,
    sign,
    threshold_field,
    to_decimal,
    to_expression,
    to_fraction,
    to_qq,
)
from tests.conftest import multinacci, rational


def test_polynomial_text_round_trip():
    p = IntPolynomial.from_text("-1,-1,1")
    assert p.degree == 2
    assert str(p) == "x**2 - x - 1"
    assert p.to_text() == "-1,-1,1"


def test_polynomial_strips_trailing_zeros():
    assert IntPolynomial((1, 2, 0, 0)).coeffs == (1, 2)


@pytest.mark.parametrize("text", ["", "1,a", " , "])
def test_polynomial_rejects_bad_text(text):
    with pytest.raises(InvalidArgumentException):
        IntPolynomial.from_text(text)


def test_multinacci_poly():
    assert multinacci_poly(3).coeffs == (-1, -1, -1, 1)
    with pytest.raises(InvalidArgumentException):
        multinacci_poly(1)


def test_golden_field_arithmetic(golden):
    beta = golden.beta
    assert beta * beta == beta + 1
    assert golden.inv_beta == beta - 1
    assert beta * beta.inverse() == golden.one
    assert beta ** -2 == 2 - beta
    assert (beta ** 5) == 5 * beta + 3


def test_field_axioms_on_sample_elements(tribonacci):
    beta = tribonacci.beta
    a = tribonacci.element([1, -2, 3])
    b = tribonacci.element([Fraction(1, 2), 0, -1])
    c = beta ** 4 - 7
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a / b * b == a
    assert a - a == tribonacci.zero
    assert (beta ** 3) == beta ** 2 + beta + 1


def test_zero_has_no_inverse(golden):
    with pytest.raises(ZeroDivisionError):
        golden.zero.inverse()


def test_elements_of_different_fields_do_not_mix(golden, tribonacci):
    with pytest.raises(InvalidArgumentException):
        golden.beta + tribonacci.beta


def test_compare_is_exact(golden):
    beta = golden.beta
    assert compare(beta, golden.from_rational(Fraction(1618, 1000))) == 1
    assert compare(beta, golden.from_rational(Fraction(16181, 10000))) == -1
    assert compare(beta * beta, beta + 1) == 0
    assert beta > 1 and beta < 2
    assert sign(golden.inv_beta - Fraction(1, 2)) == 1


def test_compare_total_order(tribonacci):
    beta = tribonacci.beta
    elements = [beta - 1, 2 - beta, beta ** -1, beta ** -2, tribonacci.from_rational(Fraction(1, 2))]
    for a in elements:
        for b in elements:
            assert compare(a, b) == -compare(b, a)
            for c in elements:
                if compare(a, b) <= 0 and compare(b, c) <= 0:
                    assert compare(a, c) <= 0


def test_undecidable_comparison_at_tiny_precision():
    field = make_field(multinacci_poly(2), precision_limit=3)
    with pytest.raises(UndecidableComparisonException):
        compare(field.beta, field.from_rational(Fraction(1618, 1000)))


def test_refine(golden):
    lo, hi = refine(golden.beta, Fraction(1, 10 ** 12))
    assert hi - lo <= QQ(1, 10 ** 12)
    assert QQ(1618033, 10 ** 6) < lo <= hi < QQ(1618034, 10 ** 6)
    assert refine(golden.zero, Fraction(1, 10)) == (QQ(0), QQ(0))
    with pytest.raises(PrecisionExceededException):
        refine(golden.beta, QQ(1, 2 ** 5000))


@pytest.mark.parametrize("n", range(2, 11))
def test_classify_multinacci(n):
    beta_class = classify_beta(multinacci(n))
    assert beta_class.regime == BetaRegime.EXACT
    assert beta_class.n == n
    assert str(beta_class) == f"Exact({n})"


@pytest.mark.parametrize("n", range(2, 10))
def test_multinacci_numbers_increase(n):
    _, hi = refine(multinacci(n).beta, Fraction(1, 10 ** 6))
    lo, _ = refine(multinacci(n + 1).beta, Fraction(1, 10 ** 6))
    assert hi < lo


@pytest.mark.parametrize(
    "value, expected",
    [("3/2", "SubGolden"), ("17/10", "Gap(3)"), ("7/4", "Gap(3)"), ("19/10", "Gap(4)"), ("39/20", "Gap(5)")],
)
def test_classify_rationals(value, expected):
    assert str(classify_beta(rational(value))) == expected


def test_parse_beta_forms():
    assert parse_beta("multinacci:4").degree == 4
    assert parse_beta("rational:3/2").is_rational
    golden = parse_beta("poly:-1,-1,1")
    assert golden.beta * golden.beta == golden.beta + 1
    assert golden.spec == "poly:-1,-1,1"


def test_parse_beta_reduces_to_irreducible_factor():
    # (x^2 - x - 1)(x + 3)
    field = parse_beta("poly:-3,-4,2,1")
    assert field.minpoly.coeffs == (-1, -1, 1)
    assert field.source.coeffs == (-3, -4, 2, 1)


@pytest.mark.parametrize(
    "spec, error",
    [
        ("rational:5/2", InvalidArgumentException),
        ("rational:1", InvalidArgumentException),
        ("multinacci:x", InvalidArgumentException),
        ("nothing", InvalidArgumentException),
        ("float:1.5", InvalidArgumentException),
        ("poly:5", InvalidArgumentException),
        ("poly:1,0,1", NoRootException),
        ("poly:-3,1", NoRootException),
        # (4x - 5)(4x - 7)
        ("poly:35,-48,16", AmbiguousRootException),
    ],
)
def test_parse_beta_errors(spec, error):
    with pytest.raises(error):
        parse_beta(spec)


def test_hint_selects_root():
    field = parse_beta("poly:35,-48,16@1,3/2")
    assert field.beta == field.from_rational(Fraction(5, 4))
    assert classify_beta(field).regime == BetaRegime.SUBGOLDEN


def test_thresholds(three_halves, seventeen_tenths):
    assert str(classify_beta(threshold_field("eta"))) == "Gap(3)"
    assert compare_beta_with(three_halves, "gamma") == 1
    assert compare_beta_with(seventeen_tenths, "eta") == -1
    assert compare_beta_with(rational("19/10"), "eta") == 1
    with pytest.raises(InvalidArgumentException):
        threshold_field("delta")


def test_reports_of_elements(golden):
    assert to_decimal(golden.beta, 12) == "1.61803398875"
    assert to_expression(golden.beta - 1) == "beta - 1"
    assert to_expression(golden.from_rational(Fraction(3, 4))) == "3/4"
    assert to_expression(golden.zero) == "0"


@pytest.mark.parametrize("value", ["3/2", "17/10", "19/10", "1997/1000"])
def test_rational_beta_is_its_own_root(value):
    field = parse_beta(f"rational:{value}")
    assert field.is_rational
    assert field.degree == 1
    assert to_fraction(field.beta) == Fraction(value)
    assert field.interval == (to_qq(value), to_qq(value))


def test_linear_factor_beside_irreducible_one():
    # (2x - 3)(x^2 + 1)
    field = parse_beta("poly:-3,2,-3,2")
    assert field.is_rational
    assert to_fraction(field.beta) == Fraction(3, 2)


def test_to_fraction_of_elements(three_halves, golden):
    assert to_fraction(three_halves.beta ** 3) == Fraction(27, 8)
    assert to_fraction(golden.beta * golden.beta - golden.beta) == 1
    with pytest.raises(InvalidArgumentException):
        to_fraction(golden.beta)

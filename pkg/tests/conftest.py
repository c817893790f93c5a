"""
Shared fields for the test suite.

Samples used throughout:
    3/2    SubGolden
    17/10  Gap(3), S^2 1 < 1/beta
    19/10  Gap(4)
    root of x^4 - 2x^3 + x^2 - 2x + 1 near 1.883: Gap(4), S^3 1 = 1/beta
"""
import pytest

from app.services.algebra import AlgebraicField, parse_beta

# rational points strictly between consecutive multinacci numbers
GAP_SAMPLES = {
    3: "17/10",
    4: "19/10",
    5: "39/20",
    6: "79/40",
    7: "159/80",
    8: "997/500",
    9: "1997/1000",
    10: "3997/2000",
}


def rational(value: str) -> AlgebraicField:
    return parse_beta(f"rational:{value}")


def multinacci(n: int) -> AlgebraicField:
    return parse_beta(f"multinacci:{n}")


@pytest.fixture
def golden() -> AlgebraicField:
    return multinacci(2)


@pytest.fixture
def tribonacci() -> AlgebraicField:
    return multinacci(3)


@pytest.fixture
def three_halves() -> AlgebraicField:
    return rational("3/2")


@pytest.fixture
def seventeen_tenths() -> AlgebraicField:
    return rational("17/10")


@pytest.fixture
def nineteen_tenths() -> AlgebraicField:
    return rational("19/10")


@pytest.fixture
def fourth_gap_boundary() -> AlgebraicField:
    # beta^4 - 2 beta^3 + beta^2 - 2 beta + 1 = 0, i.e. S^3 1 = 1/beta in Gap(4)
    return parse_beta("poly:1,-2,1,-2,1@37/20,19/10")

from app.services.algebra.classification import (
    BetaClass,
    BetaRegime,
    classify_beta,
    compare_beta_with,
    evaluate,
    parse_beta,
    threshold_field,
)
from app.services.algebra.field import (
    AlgebraicField,
    FieldElement,
    compare,
    make_field,
    refine,
    sign,
    to_decimal,
    to_expression,
    to_fraction,
    to_qq,
)
from app.services.algebra.polynomial import IntPolynomial, multinacci_poly, threshold_poly

__all__ = [
    "AlgebraicField",
    "BetaClass",
    "BetaRegime",
    "FieldElement",
    "IntPolynomial",
    "classify_beta",
    "compare",
    "compare_beta_with",
    "evaluate",
    "make_field",
    "multinacci_poly",
    "parse_beta",
    "refine",
    "sign",
    "threshold_field",
    "threshold_poly",
    "to_decimal",
    "to_expression",
    "to_fraction",
    "to_qq",
]

"""
The two beta-transformations, orbits of 1 and their order properties.
"""
from app.services.dynamics.maps import (
    Branch,
    OrbitTable,
    Orientation,
    PLMap,
    apply,
    fixed_points,
    make_map,
    orbit_of_one,
    orbit_rows,
    preimages,
)
from app.services.dynamics.orbit_lemmas import (
    ClosedFormRow,
    FixedPointBoundsResult,
    OrbitOrderResult,
    OrderCheck,
    orbit_order_check,
    s_closed_form,
    verify_closed_form,
    verify_fixed_point_bounds,
)

__all__ = [
    "Branch",
    "ClosedFormRow",
    "FixedPointBoundsResult",
    "OrbitOrderResult",
    "OrbitTable",
    "OrderCheck",
    "Orientation",
    "PLMap",
    "apply",
    "fixed_points",
    "make_map",
    "orbit_of_one",
    "orbit_order_check",
    "orbit_rows",
    "preimages",
    "s_closed_form",
    "verify_closed_form",
    "verify_fixed_point_bounds",
]

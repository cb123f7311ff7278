"""Exact arithmetic for the twelve homogeneous Hilbert curves."""
from .curves import (
    ALL_CURVES,
    IMPROPER_CURVES,
    PROPER_CURVES,
    AffineMap,
    Curve,
    CurveTable,
    OutsideQuadrantError,
    affine_apply,
    affine_unapply,
    curve_id,
    curve_table,
)
from .dyadic import CENTER, Dyadic, DyadicVec2
from .geom import (
    Cell,
    CellSequence,
    CurveProperties,
    cell_address,
    check_adjacency,
    check_boundary_conditions,
    classify_properties,
    enumerate_curve,
    invert_point,
)
from .group import Rotation, rot_inv, rot_mul, verify_group_structure
from .mapping import (
    EvalResult,
    UnsupportedCurveError,
    count03,
    count3,
    eval_improper,
    eval_proper,
    eval_proper_fast,
    eval_result,
    evaluate,
    recurse_closed_form,
    recurse_improper,
    recurse_shift,
    reversal_transform,
    transfer_distance_check,
    transfer_point,
)
from .quaternary import QuaternaryFraction, quaternary_from_index, quaternary_parse, quaternary_value

__version__ = "0.1.0"

"""Nef cones, Seshadri constants and l-very ampleness on blow-ups of P^n."""

from ._core import (
    BlowupSpace,
    CurveClass,
    DimensionError,
    DivisorClass,
    NotAmpleError,
    NotNefError,
    OutOfRangeError,
    ParseError,
    compute_bl,
    cone_description,
    curve_catalog,
    decompose,
    intersect,
    is_ample,
    is_l_very_ample,
    is_nef,
    nth_root_bound,
    run,
    scale,
    seshadri_lines,
    seshadri_lower_bound,
    seshadri_upper_bound_points,
)

__all__ = [
    "BlowupSpace",
    "CurveClass",
    "DimensionError",
    "DivisorClass",
    "NotAmpleError",
    "NotNefError",
    "OutOfRangeError",
    "ParseError",
    "compute_bl",
    "cone_description",
    "curve_catalog",
    "decompose",
    "intersect",
    "is_ample",
    "is_l_very_ample",
    "is_nef",
    "nth_root_bound",
    "run",
    "scale",
    "seshadri_lines",
    "seshadri_lower_bound",
    "seshadri_upper_bound_points",
]

"""Planar changes of variables acting on points, polynomials, curves and congruence targets."""

from .curves import (
    AFFINE,
    PUNCTURED,
    DegreePair,
    ParamCurve,
    PoleReduction,
    Puncture,
    abhyankar_moh_normalize,
    apply_curve,
    find_punctures,
    pole_reduce_at_infinity,
)
from .ops import (
    AddXPolyToY,
    AddYPolyToX,
    ChangeOfVars,
    ElementaryOp,
    ScaleX,
    ScaleY,
    Swap,
    apply_point,
    apply_poly,
)
from .targets import CongruenceTarget, transport_target

__all__ = [
    "AFFINE",
    "PUNCTURED",
    "AddXPolyToY",
    "AddYPolyToX",
    "ChangeOfVars",
    "CongruenceTarget",
    "DegreePair",
    "ElementaryOp",
    "ParamCurve",
    "PoleReduction",
    "Puncture",
    "ScaleX",
    "ScaleY",
    "Swap",
    "abhyankar_moh_normalize",
    "apply_curve",
    "apply_point",
    "apply_poly",
    "find_punctures",
    "pole_reduce_at_infinity",
    "transport_target",
]

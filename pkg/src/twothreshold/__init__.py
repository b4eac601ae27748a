"""Threshold and 2-threshold functions on two-dimensional integer grids.

Non-constant threshold functions are encoded by oriented prime segments and
proper 2-threshold functions by proper pairs of such segments. All geometry
is exact integer arithmetic.
"""
from .errors import GridParseError, GuardExceeded, PreconditionError
from .geometry import (
    ConvexPolygon,
    Empty,
    OnePoint,
    Orientation,
    OrientedSegment,
    Overlap,
    Point,
    RationalPoint,
    Side,
    convex_hull,
    hulls_disjoint,
    inner_common_tangent,
    is_prime,
    orientation,
    point_in_hull,
    segment_intersection,
    tangent_from_point,
)
from .gridio import pair_document, parse_grid, parse_pair_document, render_grid
from .oracle import naive_function_from_segment, naive_is_threshold, naive_is_two_threshold
from .properties import PropertyReport, check_property, property_ids
from .threshold import (
    GridDim,
    GridFunction,
    SeparatingInequality,
    enumerate_threshold,
    essential_points_threshold,
    function_from_segment,
    is_threshold,
    segment_from_function,
    separating_inequality,
)
from .two_threshold import (
    FunctionClass,
    PairCase,
    ProperPair,
    classify_function,
    classify_pair,
    construct_proper_pair,
    count_singleton_proper_pairs,
    enumerate_two_threshold,
    essential_points_2threshold,
    find_all_proper_pairs,
    function_from_pair,
    is_proper_pair,
)

__version__ = "0.1.0"

__all__ = [
    "ConvexPolygon",
    "Empty",
    "FunctionClass",
    "GridDim",
    "GridFunction",
    "GridParseError",
    "GuardExceeded",
    "OnePoint",
    "Orientation",
    "OrientedSegment",
    "Overlap",
    "PairCase",
    "Point",
    "PreconditionError",
    "ProperPair",
    "PropertyReport",
    "RationalPoint",
    "SeparatingInequality",
    "Side",
    "check_property",
    "classify_function",
    "classify_pair",
    "construct_proper_pair",
    "convex_hull",
    "count_singleton_proper_pairs",
    "enumerate_threshold",
    "enumerate_two_threshold",
    "essential_points_2threshold",
    "essential_points_threshold",
    "find_all_proper_pairs",
    "function_from_pair",
    "function_from_segment",
    "hulls_disjoint",
    "inner_common_tangent",
    "is_prime",
    "is_proper_pair",
    "is_threshold",
    "naive_function_from_segment",
    "naive_is_threshold",
    "naive_is_two_threshold",
    "orientation",
    "pair_document",
    "parse_grid",
    "parse_pair_document",
    "point_in_hull",
    "property_ids",
    "render_grid",
    "segment_from_function",
    "segment_intersection",
    "separating_inequality",
    "tangent_from_point",
]

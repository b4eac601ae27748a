"""2-threshold functions and proper pairs of oriented prime segments."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from .errors import GuardExceeded, PreconditionError
from .geometry import (
    OrientedSegment,
    Point,
    Side,
    convex_hull,
    det3,
    hulls_disjoint,
    inner_common_tangent,
    on_segment,
    point_in_hull,
)
from .threshold import (
    GridDim,
    GridFunction,
    _check_segment,
    _segment_table,
    closest_pair_on_line,
    function_from_segment,
    is_threshold,
    segment_value,
)

SEARCH_LIMIT = 1024
CENSUS_LIMIT = 25


class FunctionClass(enum.Enum):
    CONSTANT_ZERO = "ConstantZero"
    CONSTANT_ONE = "ConstantOne"
    THRESHOLD = "Threshold"
    PROPER_2_THRESHOLD = "Proper2Threshold"
    NOT_TWO_THRESHOLD = "NotTwoThreshold"

    def __str__(self):
        return self.value


TWO_THRESHOLD_CLASSES = frozenset({
    FunctionClass.CONSTANT_ZERO,
    FunctionClass.CONSTANT_ONE,
    FunctionClass.THRESHOLD,
    FunctionClass.PROPER_2_THRESHOLD,
})


class PairCase(enum.Enum):
    COLLINEAR_NESTED = "CollinearNested"
    TRIANGLE_A_IN_BD = "TriangleAInBD"
    TRIANGLE_C_IN_BD = "TriangleCInBD"
    CCW_QUADRILATERAL = "CcwQuadrilateral"
    NOT_PROPER = "NotProper"


@dataclass(frozen=True, order=True)
class ProperPair:
    """Unordered pair of oriented prime segments, stored with s1 <= s2."""

    s1: OrientedSegment
    s2: OrientedSegment

    @classmethod
    def of(cls, s1, s2) -> "ProperPair":
        s1 = s1 if isinstance(s1, OrientedSegment) else OrientedSegment(*s1)
        s2 = s2 if isinstance(s2, OrientedSegment) else OrientedSegment(*s2)
        return cls(*sorted((s1, s2)))

    def __iter__(self):
        yield self.s1
        yield self.s2

    def endpoints(self):
        return (self.s1.a, self.s1.b, self.s2.a, self.s2.b)

    def __str__(self):
        return f"{{{self.s1}, {self.s2}}}"


def _check_pair(s1, s2, dim):
    return _check_segment(s1, dim), _check_segment(s2, dim)


def is_proper_pair(s1, s2, dim: GridDim) -> bool:
    s1, s2 = _check_pair(s1, s2, dim)
    return bool(segment_value(s2, s1.a) and segment_value(s2, s1.b)
                and segment_value(s1, s2.a) and segment_value(s1, s2.b))


def _strictly_inside(p, a, b) -> bool:
    return p != a and p != b and on_segment(p, a, b)


def classify_pair(s1, s2, dim: GridDim) -> PairCase:
    """Geometric classification of the pair (a->b, c->d).

    The distinctness a != d, c != b, b != d is part of every case: without
    it, e.g. a pair and its reverse would count as nested.
    """
    s1, s2 = _check_pair(s1, s2, dim)
    a, b = s1
    c, d = s2
    if a == d or c == b or b == d:
        return PairCase.NOT_PROPER
    if det3(a, b, c) == 0 and det3(a, b, d) == 0:
        if on_segment(a, b, d) and on_segment(c, b, d):
            return PairCase.COLLINEAR_NESTED
        return PairCase.NOT_PROPER
    if _strictly_inside(a, b, d) and det3(c, d, b) > 0:
        return PairCase.TRIANGLE_A_IN_BD
    if _strictly_inside(c, b, d) and det3(a, b, d) > 0:
        return PairCase.TRIANGLE_C_IN_BD
    if det3(a, b, c) > 0 and det3(b, c, d) > 0 and det3(c, d, a) > 0 and det3(d, a, b) > 0:
        return PairCase.CCW_QUADRILATERAL
    return PairCase.NOT_PROPER


def function_from_pair(s1, s2, dim: GridDim) -> GridFunction:
    s1, s2 = _check_pair(s1, s2, dim)
    return function_from_segment(s1, dim) & function_from_segment(s2, dim)


def _guard(dim: GridDim, limit: int):
    if dim.size > limit:
        raise GuardExceeded(f"{dim} exceeds the exhaustive-search limit of {limit} points")


def _supersets(f: GridFunction):
    """Segment table entries whose true set contains that of f."""
    return [(s, g.bits) for s, g in _segment_table(f.dim) if f.bits & ~g.bits == 0]


def _defining_pairs(f: GridFunction):
    """Ordered pairs of segments whose conjunction is f."""
    sup = _supersets(f)
    return [(s, t, bs, bt) for s, bs in sup for t, bt in sup if bs & bt == f.bits]


def _hull_hides_false_point(f: GridFunction) -> bool:
    hull = convex_hull(f.true_points())
    return any(point_in_hull(p, hull) for p in f.false_points())


def _is_two_threshold_search(f: GridFunction) -> bool:
    sup = [bits for _, bits in _supersets(f)]
    for i, x in enumerate(sup):
        for y in sup[i:]:
            if x & y == f.bits:
                return True
    return False


@lru_cache(maxsize=None)
def _census(dim: GridDim) -> frozenset:
    tables = [g.bits for _, g in _segment_table(dim)]
    found = {0, (1 << dim.size) - 1}
    for i, x in enumerate(tables):
        found.add(x)
        for y in tables[i + 1:]:
            found.add(x & y)
    return frozenset(found)


@lru_cache(maxsize=65536)
def classify_function(f: GridFunction) -> FunctionClass:
    """Constants first, then threshold, then 2-threshold by exhaustive search."""
    if f.bits == 0:
        return FunctionClass.CONSTANT_ZERO
    if f.bits == f.full:
        return FunctionClass.CONSTANT_ONE
    if is_threshold(f):
        return FunctionClass.THRESHOLD
    _guard(f.dim, SEARCH_LIMIT)
    if f.dim.size <= CENSUS_LIMIT:
        found = f.bits in _census(f.dim)
    else:
        # a conjunction of half-planes cannot have a false point inside the hull of its true points
        found = not _hull_hides_false_point(f) and _is_two_threshold_search(f)
    return FunctionClass.PROPER_2_THRESHOLD if found else FunctionClass.NOT_TWO_THRESHOLD


def _require_proper(f: GridFunction):
    _guard(f.dim, SEARCH_LIMIT)
    cls = classify_function(f)
    if cls is not FunctionClass.PROPER_2_THRESHOLD:
        raise PreconditionError(f"function is {cls}, not proper 2-threshold")


def find_all_proper_pairs(f: GridFunction):
    _require_proper(f)
    found = set()
    for s, t, _, _ in _defining_pairs(f):
        if s < t and is_proper_pair(s, t, f.dim):
            found.add(ProperPair(s, t))
    return sorted(found)


def _left_tangent_segment(ones, region_bits, f: GridFunction) -> OrientedSegment:
    region = [p for p in f.dim.points() if region_bits >> f.dim.index(p) & 1]
    c1, c2 = inner_common_tangent(convex_hull(ones), convex_hull(region), Side.LEFT)
    return closest_pair_on_line(c1[0], c2[0], ones, region)


def construct_proper_pair(f: GridFunction) -> ProperPair:
    """Build a proper pair for f following the existence argument.

    Two false points x, y whose segment meets the hull of the true points
    (lexicographically first such pair) split every ordered defining pair
    (s, t) into the family with x false for s and true for t, y the other way
    round. Intersecting over that family gives the false-point regions
    ``mx`` and ``my``; the nearest contact points of the left inner common
    tangents from the true-point hull to each region give the two segments.
    """
    _require_proper(f)
    ones, zeros = f.true_points(), f.false_points()
    hull1 = convex_hull(ones)
    dim = f.dim
    x = y = None
    for i, p in enumerate(sorted(zeros)):
        for q in sorted(zeros)[i + 1:]:
            if not hulls_disjoint(convex_hull([p, q]), hull1):
                x, y = p, q
                break
        if x is not None:
            break
    if x is None:
        raise AssertionError("non-threshold function without a crossing false pair")
    xb, yb = 1 << dim.index(x), 1 << dim.index(y)

    mx = my = (1 << dim.size) - 1
    family = 0
    for _, _, bs, bt in _defining_pairs(f):
        if not bs & xb and bt & xb and bs & yb and not bt & yb:
            mx &= ~bs & bt
            my &= bs & ~bt
            family += 1
    if not family:
        raise AssertionError("empty family of defining pairs")

    ab = _left_tangent_segment(ones, mx, f)
    cd = _left_tangent_segment(ones, my, f)
    pair = ProperPair.of(ab, cd)
    if not is_proper_pair(ab, cd, dim) or function_from_pair(ab, cd, dim) != f:
        raise AssertionError(f"constructed pair {pair} is not a proper pair defining f")
    return pair


def essential_points_2threshold(f: GridFunction):
    _guard(f.dim, SEARCH_LIMIT)
    cls = classify_function(f)
    if cls not in (FunctionClass.THRESHOLD, FunctionClass.PROPER_2_THRESHOLD):
        raise PreconditionError(f"function is {cls}")
    return {p for p in f.dim.points() if classify_function(f.flipped(p)) in TWO_THRESHOLD_CLASSES}


def count_singleton_proper_pairs(dim: GridDim, a) -> int:
    """Number of proper pairs defining the function whose only true point is ``a``.

    Such pairs are ``{a->a+v, a->a-v}`` for primitive v (up to sign), so this
    counts primitive vectors in the box that keeps both ends on the grid.
    """
    a = Point(*a)
    if not (1 <= a.x <= dim.m - 2 and 1 <= a.y <= dim.n - 2):
        raise PreconditionError(f"{tuple(a)} is not an interior point of {dim}")
    px = min(a.x, dim.m - 1 - a.x)
    qy = min(a.y, dim.n - 1 - a.y)
    count = 1  # the vertical pair
    for p in range(1, px + 1):
        count += sum(1 for q in range(-qy, qy + 1) if gcd(p, q) == 1)
    return count


def enumerate_two_threshold(dim: GridDim):
    """All 2-threshold functions on the grid (constants and threshold included)."""
    _guard(dim, CENSUS_LIMIT)
    return [GridFunction(dim, bits) for bits in sorted(_census(dim))]

"""Threshold functions on the grid G(m, n) and their oriented prime segments."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, NamedTuple

from .errors import GuardExceeded, PreconditionError
from .geometry import (
    OrientedSegment,
    Point,
    Side,
    convex_hull,
    cross,
    det3,
    hulls_disjoint,
    inner_common_tangent,
    is_prime,
    squared_distance,
)

ENUMERATION_LIMIT = 4096


@dataclass(frozen=True, order=True)
class GridDim:
    m: int
    n: int

    def __post_init__(self):
        if not (isinstance(self.m, int) and isinstance(self.n, int)) or self.m < 1 or self.n < 1:
            raise PreconditionError(f"grid dimensions must be positive integers, got {self.m}x{self.n}")

    @property
    def size(self) -> int:
        return self.m * self.n

    def points(self):
        """Grid points in bit order (index ``y*m + x``)."""
        return [Point(x, y) for y in range(self.n) for x in range(self.m)]

    def index(self, p) -> int:
        return p[1] * self.m + p[0]

    def __contains__(self, p) -> bool:
        return 0 <= p[0] < self.m and 0 <= p[1] < self.n

    def on_boundary(self, p) -> bool:
        return p[0] in (0, self.m - 1) or p[1] in (0, self.n - 1)

    def __str__(self):
        return f"G({self.m},{self.n})"


@dataclass(frozen=True, order=True)
class GridFunction:
    """A {0,1}-valued function on G(m, n); bit ``y*m + x`` holds f(x, y)."""

    dim: GridDim
    bits: int

    def __post_init__(self):
        if self.bits < 0 or self.bits >> self.dim.size:
            raise PreconditionError("truth table does not fit the grid")

    @classmethod
    def from_true_points(cls, dim: GridDim, points: Iterable) -> "GridFunction":
        bits = 0
        for p in points:
            if p not in dim:
                raise PreconditionError(f"{tuple(p)} is outside {dim}")
            bits |= 1 << dim.index(p)
        return cls(dim, bits)

    @classmethod
    def constant(cls, dim: GridDim, value: int) -> "GridFunction":
        return cls(dim, (1 << dim.size) - 1 if value else 0)

    def __call__(self, p) -> int:
        return (self.bits >> self.dim.index(p)) & 1

    @property
    def full(self) -> int:
        return (1 << self.dim.size) - 1

    def is_constant(self) -> bool:
        return self.bits in (0, self.full)

    def true_points(self):
        return [p for p in self.dim.points() if self(p)]

    def false_points(self):
        return [p for p in self.dim.points() if not self(p)]

    def flipped(self, p) -> "GridFunction":
        return GridFunction(self.dim, self.bits ^ (1 << self.dim.index(p)))

    def __and__(self, other: "GridFunction") -> "GridFunction":
        if self.dim != other.dim:
            raise PreconditionError("conjunction of functions on different grids")
        return GridFunction(self.dim, self.bits & other.bits)


class SeparatingInequality(NamedTuple):
    """``w1*x + w2*y >= w0``."""

    w1: int
    w2: int
    w0: int

    def holds(self, p) -> bool:
        return self.w1 * p[0] + self.w2 * p[1] >= self.w0


def segment_value(seg: OrientedSegment, p) -> int:
    """Value of the function defined by ``seg`` at an arbitrary lattice point.

    Off the carrier line the point is true iff it is counterclockwise of a->b.
    On the line ``p = a + t*(b - a)`` with integer ``t`` (the segment is
    prime), and p is strictly closer to a than to b iff ``t <= 0``.
    """
    d = seg.b - seg.a
    rel = (p[0] - seg.a.x, p[1] - seg.a.y)
    c = cross(d, rel)
    if c:
        return 1 if c > 0 else 0
    return 1 if d.x * rel[0] + d.y * rel[1] <= 0 else 0


def _check_segment(seg, dim: GridDim) -> OrientedSegment:
    if not isinstance(seg, OrientedSegment):
        seg = OrientedSegment(*seg)
    for p in seg:
        if p not in dim:
            raise PreconditionError(f"endpoint {tuple(p)} is outside {dim}")
    return seg


def function_from_segment(seg, dim: GridDim) -> GridFunction:
    seg = _check_segment(seg, dim)
    bits = 0
    for i, p in enumerate(dim.points()):
        if segment_value(seg, p):
            bits |= 1 << i
    return GridFunction(dim, bits)


def separating_inequality(seg, dim: GridDim) -> SeparatingInequality:
    """Integer inequality equivalent to the segment's function on the grid.

    The carrier line is turned slightly counterclockwise about a: the weight
    vector is ``K * left_normal - d`` with K larger than any ``|d.(X - a)|``
    over the grid, so the normal term dominates off the line and the tie
    break along the line reduces to the sign of ``d.(X - a)``.
    """
    seg = _check_segment(seg, dim)
    dx, dy = seg.direction
    k = (abs(dx) + abs(dy)) * (dim.m + dim.n) + 1
    w1 = -k * dy - dx
    w2 = k * dx - dy
    return SeparatingInequality(w1, w2, w1 * seg.a.x + w2 * seg.a.y)


def is_threshold(f: GridFunction) -> bool:
    return hulls_disjoint(convex_hull(f.false_points()), convex_hull(f.true_points()))


def segment_from_function(f: GridFunction) -> OrientedSegment:
    """The unique oriented prime segment defining a non-constant threshold f."""
    if f.is_constant():
        raise PreconditionError("constant functions have no defining segment")
    ones, zeros = f.true_points(), f.false_points()
    h1, h0 = convex_hull(ones), convex_hull(zeros)
    if not hulls_disjoint(h1, h0):
        raise PreconditionError("function is not threshold")
    c1, c0 = inner_common_tangent(h1, h0, Side.LEFT)
    seg = closest_pair_on_line(c1[0], c0[0], ones, zeros)
    if function_from_segment(seg, f.dim) != f:
        raise AssertionError(f"{seg} does not reproduce the function")
    return seg


def closest_pair_on_line(p, q, firsts, seconds) -> OrientedSegment:
    """Nearest (a, b) with a from ``firsts``, b from ``seconds``, both on line pq.

    Raises AssertionError if the nearest pair is not unique or not prime.
    """
    on_a = [a for a in firsts if det3(p, q, a) == 0]
    on_b = [b for b in seconds if det3(p, q, b) == 0]
    ranked = sorted((squared_distance(a, b), a, b) for a in on_a for b in on_b)
    if len(ranked) > 1 and ranked[0][0] == ranked[1][0]:
        raise AssertionError(f"nearest contact pair on line {p}{q} is not unique")
    _, a, b = ranked[0]
    if not is_prime(a, b):
        raise AssertionError(f"nearest contact pair {a}, {b} is not adjacent")
    return OrientedSegment(a, b)


def oriented_prime_segments(dim: GridDim):
    """All oriented prime segments with both endpoints in the grid, sorted."""
    pts = sorted(dim.points())
    return [OrientedSegment(a, b) for a in pts for b in pts if is_prime(a, b)]


@lru_cache(maxsize=None)
def _segment_table(dim: GridDim):
    if dim.size > ENUMERATION_LIMIT:
        raise GuardExceeded(f"{dim} exceeds the enumeration limit of {ENUMERATION_LIMIT} points")
    return tuple((s, function_from_segment(s, dim)) for s in oriented_prime_segments(dim))


def enumerate_threshold(dim: GridDim):
    """(segment, function) for every oriented prime segment, sorted by segment.

    The two constant functions have no segment and are not listed.
    """
    return list(_segment_table(dim))


def essential_points_threshold(f: GridFunction):
    if not is_threshold(f):
        raise PreconditionError("function is not threshold")
    return {p for p in f.dim.points() if is_threshold(f.flipped(p))}

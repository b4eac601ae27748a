"""Exact integer predicates and constructions on lattice points.

Everything here works on Python ints (and ``Fraction`` for intersection
points), so every predicate is decision-exact for any grid size.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, NamedTuple, Sequence, Union

from .errors import PreconditionError


class Point(NamedTuple):
    x: int
    y: int

    def __sub__(self, other):
        return Point(self.x - other.x, self.y - other.y)

    def __add__(self, other):
        return Point(self.x + other.x, self.y + other.y)


class RationalPoint(NamedTuple):
    x: Fraction
    y: Fraction

    @classmethod
    def of(cls, x, y) -> "RationalPoint":
        return cls(Fraction(x), Fraction(y))

    @property
    def x_num(self) -> int:
        return self.x.numerator

    @property
    def x_den(self) -> int:
        return self.x.denominator

    @property
    def y_num(self) -> int:
        return self.y.numerator

    @property
    def y_den(self) -> int:
        return self.y.denominator

    def __str__(self):
        return f"({self.x}, {self.y})"


class Orientation(enum.IntEnum):
    CLOCKWISE = -1
    COLLINEAR = 0
    COUNTERCLOCKWISE = 1

    def reverse(self) -> "Orientation":
        return Orientation(-self.value)


class Side(enum.Enum):
    LEFT = "left"
    RIGHT = "right"


def cross(u, v) -> int:
    return u[0] * v[1] - u[1] * v[0]


def det3(a, b, c) -> int:
    """Signed doubled area of triangle abc (positive when counterclockwise)."""
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def orientation(a, b, c) -> Orientation:
    d = det3(a, b, c)
    if d > 0:
        return Orientation.COUNTERCLOCKWISE
    if d < 0:
        return Orientation.CLOCKWISE
    return Orientation.COLLINEAR


def is_prime(a, b) -> bool:
    """True iff a != b and no other lattice point lies on segment ab."""
    dx, dy = b[0] - a[0], b[1] - a[1]
    return (dx, dy) != (0, 0) and gcd(dx, dy) == 1


def squared_distance(a, b) -> int:
    return (a[0] - b[0]) ** 2 + (a[1] - b[1]) ** 2


def on_segment(p, a, b) -> bool:
    """Closed-segment membership; ``a == b`` is allowed."""
    if det3(a, b, p) != 0:
        return False
    return (min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
            and min(a[1], b[1]) <= p[1] <= max(a[1], b[1]))


@dataclass(frozen=True, order=True)
class OrientedSegment:
    """An ordered pair of adjacent lattice points a -> b."""

    a: Point
    b: Point

    def __post_init__(self):
        object.__setattr__(self, "a", Point(*self.a))
        object.__setattr__(self, "b", Point(*self.b))
        if not is_prime(self.a, self.b):
            raise PreconditionError(f"{self.a}->{self.b} is not a prime segment")

    @property
    def direction(self) -> Point:
        return self.b - self.a

    def reversed(self) -> "OrientedSegment":
        return OrientedSegment(self.b, self.a)

    def __iter__(self):
        yield self.a
        yield self.b

    def __str__(self):
        return f"({self.a.x},{self.a.y})->({self.b.x},{self.b.y})"


@dataclass(frozen=True)
class ConvexPolygon:
    """Convex hull of lattice points.

    Vertices run counterclockwise from the lexicographically smallest one,
    with no collinear vertices kept. Zero, one and two vertices stand for the
    empty set, a point and a segment.
    """

    vertices: tuple = ()

    def __len__(self):
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    @property
    def is_empty(self) -> bool:
        return not self.vertices

    def edges(self):
        v = self.vertices
        if len(v) == 2:
            return [(v[0], v[1])]
        if len(v) < 2:
            return []
        return [(v[i], v[(i + 1) % len(v)]) for i in range(len(v))]


def convex_hull(points: Iterable) -> ConvexPolygon:
    pts = sorted(set(Point(*p) for p in points))
    if len(pts) <= 2:
        return ConvexPolygon(tuple(pts))

    def half(seq):
        chain = []
        for p in seq:
            while len(chain) >= 2 and det3(chain[-2], chain[-1], p) <= 0:
                chain.pop()
            chain.append(p)
        return chain

    lower = half(pts)
    upper = half(reversed(pts))
    return ConvexPolygon(tuple(lower[:-1] + upper[:-1]))


def point_in_hull(p, h: ConvexPolygon) -> bool:
    v = h.vertices
    if not v:
        return False
    if len(v) == 1:
        return tuple(p) == tuple(v[0])
    if len(v) == 2:
        return on_segment(p, v[0], v[1])
    return all(det3(a, b, p) >= 0 for a, b in h.edges())


def segments_meet(p1, p2, q1, q2) -> bool:
    """Closed segments p1p2 and q1q2 share at least one point."""
    d1 = det3(q1, q2, p1)
    d2 = det3(q1, q2, p2)
    d3 = det3(p1, p2, q1)
    d4 = det3(p1, p2, q2)
    if ((d1 > 0 and d2 < 0) or (d1 < 0 and d2 > 0)) and \
            ((d3 > 0 and d4 < 0) or (d3 < 0 and d4 > 0)):
        return True
    return (on_segment(p1, q1, q2) or on_segment(p2, q1, q2)
            or on_segment(q1, p1, p2) or on_segment(q2, p1, p2))


def hulls_disjoint(h1: ConvexPolygon, h2: ConvexPolygon) -> bool:
    """Exact test that two closed convex regions do not intersect.

    Two convex regions meet iff a vertex of one lies in the other or two of
    their boundary edges cross.
    """
    if h1.is_empty or h2.is_empty:
        return True
    if any(point_in_hull(p, h2) for p in h1) or any(point_in_hull(p, h1) for p in h2):
        return False
    for a, b in h1.edges():
        for c, d in h2.edges():
            if segments_meet(a, b, c, d):
                return False
    return True


@dataclass(frozen=True)
class Empty:
    pass


@dataclass(frozen=True)
class OnePoint:
    point: RationalPoint


@dataclass(frozen=True)
class Overlap:
    start: RationalPoint
    end: RationalPoint


SegmentIntersection = Union[Empty, OnePoint, Overlap]


def segment_intersection(s1: Sequence, s2: Sequence) -> SegmentIntersection:
    (p1, p2), (q1, q2) = s1, s2
    p1, p2, q1, q2 = (Point(*p) for p in (p1, p2, q1, q2))
    d1 = p2 - p1
    d2 = q2 - q1
    denom = cross(d1, d2)
    w = q1 - p1
    if denom != 0:
        t = Fraction(cross(w, d2), denom)
        u = Fraction(cross(w, d1), denom)
        if 0 <= t <= 1 and 0 <= u <= 1:
            return OnePoint(RationalPoint(p1.x + t * d1.x, p1.y + t * d1.y))
        return Empty()
    if cross(w, d1) != 0 or cross(w, d2) != 0:
        return Empty()
    # collinear (or degenerate): lexicographic order follows the common line
    lo = max(min(p1, p2), min(q1, q2))
    hi = min(max(p1, p2), max(q1, q2))
    if lo > hi:
        return Empty()
    if lo == hi:
        return OnePoint(RationalPoint.of(*lo))
    return Overlap(RationalPoint.of(*lo), RationalPoint.of(*hi))


def _contact(h: ConvexPolygon, a, b, origin):
    on = [v for v in h if det3(a, b, v) == 0]
    return tuple(sorted(on, key=lambda v: squared_distance(origin, v)))


def _sides_ok(h, a, b, want) -> bool:
    for v in h:
        s = det3(a, b, v)
        if s != 0 and (s > 0) != (want > 0):
            return False
    return True


def tangent_from_point(x, h: ConvexPolygon, side: Side) -> tuple:
    """Contact set of the left or right tangent from ``x`` to ``h``.

    Returns the hull vertices lying on the tangent line, nearest to ``x``
    first (one vertex, or the two ends of a contact edge). When the whole
    hull lies on a line through ``x`` both sides give that line.
    """
    if h.is_empty:
        raise PreconditionError("tangent to an empty hull")
    x = Point(*x)
    if point_in_hull(x, h):
        raise PreconditionError(f"{x} lies in the hull")
    want = -1 if side is Side.LEFT else 1
    for v in h:
        if _sides_ok(h, x, v, want):
            return _contact(h, x, v, x)
    raise AssertionError("no tangent found")  # pragma: no cover


def inner_common_tangent(h1: ConvexPolygon, h2: ConvexPolygon, side: Side):
    """Contact sets ``(on h1, on h2)`` of the left or right inner common tangent.

    For the left tangent, directed from its contact on ``h1`` to its contact on
    ``h2``, the rest of ``h1`` is strictly counterclockwise of the line and the
    rest of ``h2`` strictly clockwise; the right tangent is the mirror image.
    Each contact set is ordered nearest-to-the-other-hull first.
    """
    if h1.is_empty or h2.is_empty:
        raise PreconditionError("inner common tangent of an empty hull")
    if not hulls_disjoint(h1, h2):
        raise PreconditionError("hulls intersect")
    want = 1 if side is Side.LEFT else -1
    for u in h1:
        for v in h2:
            if _sides_ok(h1, u, v, want) and _sides_ok(h2, u, v, -want):
                return _contact(h1, u, v, v), _contact(h2, u, v, u)
    raise AssertionError("no inner common tangent found")  # pragma: no cover


from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, strategies as st

from twothreshold import (
    ConvexPolygon,
    Empty,
    OnePoint,
    Orientation,
    OrientedSegment,
    Overlap,
    PreconditionError,
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

coords = st.tuples(st.integers(-20, 20), st.integers(-20, 20))


@pytest.mark.parametrize("a, b, c, expected", [
    ((0, 0), (1, 1), (2, 2), Orientation.COLLINEAR),
    ((0, 0), (1, 0), (0, 1), Orientation.COUNTERCLOCKWISE),
    ((2, 1), (0, 0), (0, 2), Orientation.CLOCKWISE),
    ((0, 0), (0, 0), (3, 1), Orientation.COLLINEAR),
])
def test_orientation(a, b, c, expected):
    assert orientation(a, b, c) is expected


@given(coords, coords, coords)
def test_orientation_antisymmetric(a, b, c):
    assert orientation(b, a, c) == orientation(a, b, c).reverse()
    assert orientation(b, c, a) == orientation(a, b, c)


@pytest.mark.parametrize("a, b, expected", [
    ((0, 0), (1, 1), True),
    ((0, 0), (2, 2), False),
    ((4, 3), (1, 1), True),
    ((1, 1), (1, 1), False),
    ((0, 0), (0, 1), True),
])
def test_is_prime(a, b, expected):
    assert is_prime(a, b) is expected


@given(coords, coords)
def test_is_prime_matches_lattice_scan(a, b):
    inner = [
        p for p in product(range(min(a[0], b[0]), max(a[0], b[0]) + 1),
                           range(min(a[1], b[1]), max(a[1], b[1]) + 1))
        if p not in (a, b) and orientation(a, b, p) is Orientation.COLLINEAR
    ]
    assert is_prime(a, b) == (a != b and not inner)


def test_oriented_segment_rejects_non_prime():
    with pytest.raises(PreconditionError):
        OrientedSegment((0, 0), (2, 2))
    with pytest.raises(PreconditionError):
        OrientedSegment((1, 1), (1, 1))


def test_hull_examples():
    assert convex_hull([]).vertices == ()
    assert convex_hull([(0, 0), (1, 0), (2, 0)]).vertices == ((0, 0), (2, 0))
    assert convex_hull([(0, 0), (2, 0), (1, 1), (1, 3), (0, 2)]).vertices == (
        (0, 0), (2, 0), (1, 3), (0, 2))
    assert convex_hull([(3, 3), (3, 3)]).vertices == ((3, 3),)


@given(st.lists(coords, max_size=12))
def test_hull_canonical(points):
    h = convex_hull(points)
    vs = h.vertices
    assert convex_hull(vs) == h
    assert all(point_in_hull(p, h) for p in points)
    if vs:
        assert vs[0] == min(vs)
    if len(vs) >= 3:
        for i in range(len(vs)):
            assert orientation(vs[i], vs[(i + 1) % len(vs)], vs[(i + 2) % len(vs)]) is Orientation.COUNTERCLOCKWISE


def test_point_in_hull():
    tri = convex_hull([(0, 0), (2, 0), (0, 2)])
    assert point_in_hull((1, 1), tri)
    assert not point_in_hull((5, 5), tri)
    assert not point_in_hull((0, 0), ConvexPolygon(()))


def test_hulls_disjoint_examples():
    assert hulls_disjoint(convex_hull([(0, 0)]), convex_hull([(1, 0)]))
    assert not hulls_disjoint(convex_hull([(0, 0), (1, 1)]), convex_hull([(0, 1), (1, 0)]))
    assert hulls_disjoint(convex_hull([(0, 0), (0, 1), (1, 1)]), convex_hull([(1, 0)]))
    assert hulls_disjoint(ConvexPolygon(()), convex_hull([(0, 0)]))


small = st.tuples(st.integers(0, 4), st.integers(0, 4))


@given(st.lists(small, min_size=1, max_size=5), st.lists(small, min_size=1, max_size=5))
def test_hulls_disjoint_symmetric_and_consistent(p, q):
    h1, h2 = convex_hull(p), convex_hull(q)
    assert hulls_disjoint(h1, h2) == hulls_disjoint(h2, h1)
    if set(p) & set(q) or any(point_in_hull(x, h2) for x in p):
        assert not hulls_disjoint(h1, h2)


def test_segment_intersection_examples():
    assert segment_intersection(((0, 0), (2, 2)), ((0, 2), (2, 0))) == OnePoint(
        (Fraction(1), Fraction(1)))
    assert segment_intersection(((0, 0), (1, 0)), ((2, 0), (3, 0))) == Empty()
    r = segment_intersection(((0, 0), (2, 0)), ((1, 0), (3, 0)))
    assert isinstance(r, Overlap)
    assert (r.start, r.end) == ((1, 0), (2, 0))
    r = segment_intersection(((0, 0), (1, 2)), ((1, 0), (0, 1)))
    assert r == OnePoint((Fraction(1, 3), Fraction(2, 3)))


@given(small, small, small, small)
def test_segment_intersection_point_lies_on_both(a, b, c, d):
    r = segment_intersection((a, b), (c, d))
    if isinstance(r, OnePoint):
        x, y = r.point
        for p, q in ((a, b), (c, d)):
            cross = (q[0] - p[0]) * (y - p[1]) - (q[1] - p[1]) * (x - p[0])
            assert cross == 0
            assert min(p[0], q[0]) <= x <= max(p[0], q[0])
            assert min(p[1], q[1]) <= y <= max(p[1], q[1])


def test_tangent_from_point_examples():
    seg = convex_hull([(0, 0), (0, 2)])
    assert tangent_from_point((2, 1), seg, Side.LEFT) == ((0, 0),)
    assert tangent_from_point((2, 1), seg, Side.RIGHT) == ((0, 2),)
    dot = convex_hull([(0, 0)])
    assert tangent_from_point((1, 0), dot, Side.LEFT) == ((0, 0),)
    assert tangent_from_point((1, 0), dot, Side.RIGHT) == ((0, 0),)


def test_tangent_from_point_errors():
    with pytest.raises(PreconditionError):
        tangent_from_point((0, 1), convex_hull([(0, 0), (0, 2)]), Side.LEFT)
    with pytest.raises(PreconditionError):
        tangent_from_point((0, 1), ConvexPolygon(()), Side.LEFT)


def test_inner_common_tangent_examples():
    a, b = convex_hull([(0, 0)]), convex_hull([(2, 0)])
    for side in Side:
        assert inner_common_tangent(a, b, side) == (((0, 0),), ((2, 0),))
    seg, dot = convex_hull([(0, 0), (0, 2)]), convex_hull([(2, 1)])
    assert inner_common_tangent(seg, dot, Side.LEFT) == (((0, 0),), ((2, 1),))
    assert inner_common_tangent(seg, dot, Side.RIGHT) == (((0, 2),), ((2, 1),))


def test_inner_common_tangent_rejects_overlap():
    with pytest.raises(PreconditionError):
        inner_common_tangent(convex_hull([(0, 0), (1, 1)]), convex_hull([(0, 1), (1, 0)]), Side.LEFT)

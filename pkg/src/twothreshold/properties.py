"""Exhaustive property sweeps over small grids.

Each registered check walks its whole case space on a grid G(m, n) and
collects every counterexample; nothing is sampled. Point-configuration
claims use the grid points as their coordinate box.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations

from .errors import GuardExceeded
from .geometry import (
    Empty,
    OnePoint,
    Orientation,
    Point,
    Side,
    convex_hull,
    det3,
    hulls_disjoint,
    inner_common_tangent,
    on_segment,
    orientation,
    point_in_hull,
    segment_intersection,
    tangent_from_point,
)
from .oracle import naive_function_from_segment, naive_is_threshold, naive_is_two_threshold
from .threshold import (
    GridDim,
    GridFunction,
    enumerate_threshold,
    essential_points_threshold,
    is_threshold,
    segment_from_function,
    separating_inequality,
)
from .two_threshold import (
    TWO_THRESHOLD_CLASSES,
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


@dataclass
class PropertyReport:
    property_id: str
    domain_size: GridDim
    cases_checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return not self.failures

    def fail(self, message):
        self.failures.append(message)

    def to_dict(self):
        return {
            "property_id": self.property_id,
            "m": self.domain_size.m,
            "n": self.domain_size.n,
            "cases_checked": self.cases_checked,
            "failures": list(self.failures),
            "holds": self.holds,
        }


_REGISTRY = {}

# domain each claim is stated on
DEFAULT_DOMAINS = {}


def register(name, default=(4, 4), limit=None):
    def deco(fn):
        _REGISTRY[name] = (fn, limit)
        DEFAULT_DOMAINS[name] = GridDim(*default)
        return fn
    return deco


def property_ids():
    return sorted(_REGISTRY)


def check_property(property_id: str, dim: GridDim | None = None) -> PropertyReport:
    try:
        fn, limit = _REGISTRY[property_id]
    except KeyError:
        raise KeyError(f"unknown property {property_id!r}") from None
    if dim is None:
        dim = DEFAULT_DOMAINS[property_id]
    if limit is not None and dim.size > limit:
        raise GuardExceeded(f"{property_id} is limited to grids of at most {limit} points")
    report = PropertyReport(property_id, dim)
    fn(dim, report)
    return report


def _segments(dim):
    return [s for s, _ in enumerate_threshold(dim)]


def _line_meets_segment(a, b, c, d, dim):
    """Intersection of line(ab) with closed segment cd, via a long chord of the line."""
    k = 2 * (dim.m + dim.n) + 2
    dx, dy = b[0] - a[0], b[1] - a[1]
    chord = ((a[0] - k * dx, a[1] - k * dy), (a[0] + k * dx, a[1] + k * dy))
    return segment_intersection(chord, (c, d))


def _rational_between(p, a, b) -> bool:
    """Point p (rational) on the closed segment ab, assuming collinearity."""
    return (min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
            and min(a[1], b[1]) <= p[1] <= max(a[1], b[1]))


# ---------------------------------------------------------------- geometry

@register("orientation_antisymmetry", default=(5, 5), limit=64)
def _orientation_antisymmetry(dim, report):
    pts = dim.points()
    for a, b, c in permutations(pts, 3):
        o = orientation(a, b, c)
        if o is Orientation.COLLINEAR:
            continue
        report.cases_checked += 1
        if orientation(b, a, c) is not o.reverse():
            report.fail(f"orientation{a, b, c}={o.name} but swapped is not reversed")


@register("claim_same_orient", default=(5, 5), limit=36)
def _claim_same_orient(dim, report):
    pts = dim.points()
    for a, b in permutations(pts, 2):
        off = [p for p in pts if det3(a, b, p) != 0]
        for c, d in combinations(off, 2):
            report.cases_checked += 1
            same = orientation(a, b, c) == orientation(a, b, d)
            misses = isinstance(_line_meets_segment(a, b, c, d, dim), Empty)
            if same != misses:
                report.fail(f"a={a} b={b} c={c} d={d}: same={same} misses={misses}")


@register("claim_collinear_segments_point", default=(7, 7), limit=81)
def _claim_collinear_segments_point(dim, report):
    pts = dim.points()
    for s in _segments(dim):
        a, b = s
        d_ = s.direction
        for c in pts:
            d = Point(c.x + d_.x, c.y + d_.y)
            if d not in dim or det3(a, b, c) != 0:
                continue
            for e in pts:
                if det3(a, b, e) == 0:
                    continue
                report.cases_checked += 1
                if orientation(a, b, e) != orientation(c, d, e):
                    report.fail(f"{a}->{b} and {c}->{d} disagree at {e}")


def _quadruples(dim):
    return permutations(dim.points(), 4)


@register("claim_clockwise_triangles", default=(5, 5), limit=25)
def _claim_clockwise_triangles(dim, report):
    for a, b, c, d in _quadruples(dim):
        o = orientation(a, b, d)
        if o is Orientation.COLLINEAR or orientation(b, c, d) is not o or orientation(c, a, d) is not o:
            continue
        report.cases_checked += 1
        if orientation(a, b, c) is not o:
            report.fail(f"{a},{b},{c},{d}: abc is not {o.name}")


@register("claim_convex_quadrilateral", default=(5, 5), limit=25)
def _claim_convex_quadrilateral(dim, report):
    for a, b, c, d in _quadruples(dim):
        o = orientation(a, b, c)
        if (o is Orientation.COLLINEAR or orientation(b, c, d) is not o
                or orientation(c, d, a) is not o or orientation(d, a, b) is not o):
            continue
        report.cases_checked += 1
        hull = convex_hull([a, b, c, d]).vertices
        cycle = [a, b, c, d] if o is Orientation.COUNTERCLOCKWISE else [d, c, b, a]
        k = cycle.index(hull[0]) if len(hull) == 4 else -1
        if k < 0 or list(hull) != cycle[k:] + cycle[:k]:
            report.fail(f"{a},{b},{c},{d}: hull {hull} does not match the {o.name} cycle")


def _small_hulls(dim, sizes):
    seen = set()
    for k in sizes:
        for pts in combinations(dim.points(), k):
            h = convex_hull(pts)
            if h not in seen:
                seen.add(h)
                yield h


@register("claim_tangent_on_line", default=(4, 4), limit=25)
def _claim_tangent_on_line(dim, report):
    pts = dim.points()
    for h in _small_hulls(dim, (2, 3)):
        for x in pts:
            if point_in_hull(x, h):
                continue
            for side in Side:
                contact = tangent_from_point(x, h, side)
                if all(det3(x, contact[0], v) == 0 for v in h):
                    continue  # side label is vacuous when the hull lies on the line
                for y in pts:
                    if y == x or det3(x, contact[0], y) != 0:
                        continue
                    report.cases_checked += 1
                    lhs = (not point_in_hull(y, h)
                           and all(det3(x, contact[0], v) == 0 for v in tangent_from_point(y, h, side)))
                    rhs = hulls_disjoint(convex_hull([x, y]), h)
                    if lhs != rhs:
                        report.fail(f"hull {h.vertices} x={x} y={y} {side.value}: tangent={lhs} misses={rhs}")


@register("hull_idempotence", default=(4, 4), limit=16)
def _hull_idempotence(dim, report):
    pts = dim.points()
    for mask in range(1 << len(pts)):
        s = [p for i, p in enumerate(pts) if mask >> i & 1]
        h = convex_hull(s)
        report.cases_checked += 1
        if convex_hull(h.vertices) != h or not all(point_in_hull(p, h) for p in s):
            report.fail(f"hull of {s} is not stable")


def _separates(h1, h2, c1, c2, side) -> bool:
    want = 1 if side is Side.LEFT else -1
    p, q = c1[0], c2[0]
    for v in h1:
        s = det3(p, q, v)
        if s and (s > 0) != (want > 0):
            return False
    for v in h2:
        s = det3(p, q, v)
        if s and (s > 0) == (want > 0):
            return False
    return all(det3(p, q, v) == 0 for v in c1 + c2)


@register("inner_tangent_separates", default=(4, 4), limit=25)
def _inner_tangent_separates(dim, report):
    cases = [(convex_hull(g.true_points()), convex_hull(g.false_points()))
             for _, g in enumerate_threshold(dim)]
    small = list(_small_hulls(dim, (1, 2)))
    cases += [(h1, h2) for h1 in small for h2 in small if hulls_disjoint(h1, h2)]
    for h1, h2 in cases:
        for side in Side:
            report.cases_checked += 1
            c1, c2 = inner_common_tangent(h1, h2, side)
            if not _separates(h1, h2, c1, c2, side):
                report.fail(f"{side.value} tangent {c1}-{c2} does not separate {h1.vertices} | {h2.vertices}")


# --------------------------------------------------------------- threshold

def _count_prime_segments(dim):
    pts = dim.points()
    count = 0
    for a in pts:
        for b in pts:
            if a == b:
                continue
            inner = [p for p in pts if p != a and p != b and on_segment(p, a, b)]
            count += not inner
    return count


@register("bijection", default=(3, 2), limit=16)
def _bijection(dim, report):
    table = enumerate_threshold(dim)
    bits = [g.bits for _, g in table]
    report.cases_checked += len(table)
    if len(set(bits)) != len(bits):
        report.fail("two segments define the same function")
    expected = _count_prime_segments(dim)
    if len(table) != expected:
        report.fail(f"{len(table)} entries but {expected} oriented prime segments")
    full = (1 << dim.size) - 1
    listed = set(bits)
    for b in range(1, full):
        f = GridFunction(dim, b)
        report.cases_checked += 1
        if is_threshold(f) != (b in listed):
            report.fail(f"function {b:#x}: threshold={is_threshold(f)} listed={b in listed}")


@register("round_trip", default=(4, 4), limit=64)
def _round_trip(dim, report):
    for s, g in enumerate_threshold(dim):
        report.cases_checked += 1
        back = segment_from_function(g)
        if back != s:
            report.fail(f"{s} came back as {back}")


@register("inequality_consistency", default=(4, 4), limit=64)
def _inequality_consistency(dim, report):
    for s, g in enumerate_threshold(dim):
        ineq = separating_inequality(s, dim)
        for p in dim.points():
            report.cases_checked += 1
            if ineq.holds(p) != bool(g(p)):
                report.fail(f"{s}: inequality {tuple(ineq)} disagrees at {p}")


@register("claim_points_on_line", default=(5, 5), limit=64)
def _claim_points_on_line(dim, report):
    for s, g in enumerate_threshold(dim):
        a, b = s
        for c in dim.points():
            if det3(a, b, c) != 0:
                continue
            report.cases_checked += 1
            ok = (g(c) and on_segment(a, b, c)) or (not g(c) and on_segment(b, a, c))
            if not ok:
                report.fail(f"{s} at {c}: f={g(c)}")


@register("thm3_left_tangent", default=(4, 4), limit=64)
def _thm3_left_tangent(dim, report):
    for s, g in enumerate_threshold(dim):
        report.cases_checked += 1
        c1, c0 = inner_common_tangent(convex_hull(g.true_points()), convex_hull(g.false_points()), Side.LEFT)
        if not all(det3(s.a, s.b, p) == 0 for p in c1 + c0):
            report.fail(f"{s}: left inner common tangent touches {c1} and {c0}")


@register("thm3_essential", default=(4, 4), limit=64)
def _thm3_essential(dim, report):
    for s, g in enumerate_threshold(dim):
        report.cases_checked += 1
        ess = essential_points_threshold(g)
        if s.a not in ess or s.b not in ess:
            report.fail(f"{s}: endpoints not essential (essential set {sorted(ess)})")


# ----------------------------------------------------------- two-threshold

def _proper_pairs(dim):
    segs = _segments(dim)
    return [(s, t) for s in segs for t in segs if s < t and is_proper_pair(s, t, dim)]


@register("thm4_iff", default=(4, 4), limit=25)
def _thm4_iff(dim, report):
    segs = _segments(dim)
    for s in segs:
        for t in segs:
            report.cases_checked += 1
            case = classify_pair(s, t, dim)
            if (case is not PairCase.NOT_PROPER) != is_proper_pair(s, t, dim):
                report.fail(f"({s}, {t}): classified {case.value}, proper={is_proper_pair(s, t, dim)}")


@register("claim_zeros_ones_intersection", default=(4, 4), limit=25)
def _claim_zeros_ones_intersection(dim, report):
    for s, t in _proper_pairs(dim):
        for (a, b), (c, d) in ((s, t), (t, s)):
            report.cases_checked += 1
            if isinstance(segment_intersection((a, c), (b, d)), Empty):
                report.fail(f"{s}, {t}: AC and BD are disjoint")
        if is_threshold(function_from_pair(s, t, dim)):
            report.fail(f"{s}, {t}: defined function is threshold")


@register("cor_all_ones_on_line", default=(4, 4), limit=25)
def _cor_all_ones_on_line(dim, report):
    for s, t in _proper_pairs(dim):
        if classify_pair(s, t, dim) is not PairCase.COLLINEAR_NESTED:
            continue
        report.cases_checked += 1
        ones = set(function_from_pair(s, t, dim).true_points())
        expected = {p for p in dim.points() if on_segment(p, s.a, t.a)}
        if ones != expected:
            report.fail(f"{s}, {t}: true set {sorted(ones)} != AC points {sorted(expected)}")


@register("cor_superb_intersect", default=(4, 4), limit=25)
def _cor_superb_intersect(dim, report):
    for s, t in _proper_pairs(dim):
        for first, second in ((s, t), (t, s)):
            report.cases_checked += 1
            meet = not isinstance(segment_intersection(tuple(first), tuple(second)), Empty)
            single = function_from_pair(s, t, dim).true_points() == [first.a]
            if meet != single:
                report.fail(f"{first}, {second}: segments meet={meet}, singleton at A={single}")


def _zeros_ones_cases(dim):
    tables = enumerate_threshold(dim)
    for s, fs in tables:
        for t, ft in tables:
            if s != t and fs(t.a) and not fs(t.b) and ft(s.a):
                yield s, t, ft


@register("claim_segments_zeros_ones", default=(4, 4), limit=25)
def _claim_segments_zeros_ones(dim, report):
    for s, t, ft in _zeros_ones_cases(dim):
        a, b = s
        c, d = t
        report.cases_checked += 1
        if not ft(b):
            report.fail(f"{s}, {t}: f_CD(B) = 0")
        if det3(b, c, d) == 0:
            report.fail(f"{s}, {t}: B, C, D collinear")
        elif not point_in_hull(a, convex_hull([b, c, d])):
            report.fail(f"{s}, {t}: A outside triangle BCD")


@register("cor_intersection_is_point", default=(4, 4), limit=25)
def _cor_intersection_is_point(dim, report):
    for s, t, _ in _zeros_ones_cases(dim):
        a, b = s
        c, d = t
        report.cases_checked += 1
        meet = _line_meets_segment(a, b, c, d, dim)
        if not isinstance(meet, OnePoint):
            report.fail(f"{s}, {t}: line(AB) meets CD in {meet}")
            continue
        x = meet.point
        if not _rational_between(a, x, b):
            report.fail(f"{s}, {t}: A is not on segment XB, X={x}")


@register("thm4_essential", default=(4, 4), limit=25)
def _thm4_essential(dim, report):
    for s, t in _proper_pairs(dim):
        report.cases_checked += 1
        f = function_from_pair(s, t, dim)
        ess = essential_points_2threshold(f)
        missing = [p for p in (s.a, s.b, t.a, t.b) if p not in ess]
        if missing:
            report.fail(f"{s}, {t}: endpoints {missing} not essential")


def _proper_functions(dim):
    return [f for f in enumerate_two_threshold(dim)
            if classify_function(f) is FunctionClass.PROPER_2_THRESHOLD]


@register("thm5_existence", default=(4, 4), limit=25)
def _thm5_existence(dim, report):
    for f in _proper_functions(dim):
        report.cases_checked += 1
        pairs = find_all_proper_pairs(f)
        if not pairs:
            report.fail(f"{f.bits:#x}: no proper pair")
            continue
        try:
            built = construct_proper_pair(f)
        except AssertionError as exc:
            report.fail(f"{f.bits:#x}: construction failed: {exc}")
            continue
        if built not in pairs or function_from_pair(built.s1, built.s2, dim) != f:
            report.fail(f"{f.bits:#x}: constructed {built} not among {pairs}")


@register("thm5_uniqueness_boundary", default=(4, 4), limit=25)
def _thm5_uniqueness_boundary(dim, report):
    for f in _proper_functions(dim):
        if not any(dim.on_boundary(p) for p in f.true_points()):
            continue
        report.cases_checked += 1
        pairs = find_all_proper_pairs(f)
        if len(pairs) != 1:
            report.fail(f"{f.bits:#x}: {len(pairs)} proper pairs")


@register("lemma5_boundary_singleton", default=(4, 4), limit=64)
def _lemma5_boundary_singleton(dim, report):
    for x in dim.points():
        on_x = x.x in (0, dim.m - 1)
        on_y = x.y in (0, dim.n - 1)
        if on_x == on_y:
            continue
        report.cases_checked += 1
        step = Point(0, 1) if on_x else Point(1, 0)
        expected = ProperPair.of((x, x - step), (x, x + step))
        f = GridFunction.from_true_points(dim, [x])
        pairs = find_all_proper_pairs(f)
        if pairs != [expected]:
            report.fail(f"singleton {x}: pairs {[str(p) for p in pairs]}")


@register("singleton_count", default=(5, 5), limit=64)
def _singleton_count(dim, report):
    for a in dim.points():
        if not (1 <= a.x <= dim.m - 2 and 1 <= a.y <= dim.n - 2):
            continue
        report.cases_checked += 1
        f = GridFunction.from_true_points(dim, [a])
        got = count_singleton_proper_pairs(dim, a)
        brute = len(find_all_proper_pairs(f))
        if got != brute:
            report.fail(f"singleton {a}: count {got}, exhaustive {brute}")


# ------------------------------------------------------------------ oracle

@register("oracle_segment_function", default=(5, 5), limit=64)
def _oracle_segment_function(dim, report):
    for s, g in enumerate_threshold(dim):
        report.cases_checked += 1
        if naive_function_from_segment(tuple(s), dim) != g:
            report.fail(f"{s}: naive and fast truth tables differ")


@register("oracle_threshold", default=(3, 3), limit=16)
def _oracle_threshold(dim, report):
    for b in range(1 << dim.size):
        f = GridFunction(dim, b)
        report.cases_checked += 1
        if naive_is_threshold(f) != is_threshold(f):
            report.fail(f"{b:#x}: naive={naive_is_threshold(f)} hull={is_threshold(f)}")


@register("oracle_two_threshold", default=(3, 3), limit=12)
def _oracle_two_threshold(dim, report):
    for b in range(1 << dim.size):
        f = GridFunction(dim, b)
        report.cases_checked += 1
        naive = naive_is_two_threshold(f)
        fast = classify_function(f) in TWO_THRESHOLD_CLASSES
        if naive != fast:
            report.fail(f"{b:#x}: naive={naive} classify={classify_function(f)}")

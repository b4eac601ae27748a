"""Brute-force reference implementations.

Deliberately naive and self-contained: nothing here calls the geometry,
threshold or two_threshold modules, so agreement with them is evidence.
"""
from functools import lru_cache

from .errors import GuardExceeded, PreconditionError
from .threshold import GridDim, GridFunction

NAIVE_THRESHOLD_LIMIT = 64
NAIVE_TWO_THRESHOLD_LIMIT = 25


def _det(a, b, c):
    # | a1 a2 1 |
    # | b1 b2 1 |
    # | c1 c2 1 |
    return (a[0] * (b[1] - c[1]) - a[1] * (b[0] - c[0]) + (b[0] * c[1] - b[1] * c[0]))


def _adjacent(a, b):
    """No lattice point strictly between a and b (checked by scanning the box)."""
    if a == b:
        return False
    for x in range(min(a[0], b[0]), max(a[0], b[0]) + 1):
        for y in range(min(a[1], b[1]), max(a[1], b[1]) + 1):
            p = (x, y)
            if p != a and p != b and _det(a, b, p) == 0:
                return False
    return True


def _dist2(p, q):
    return (p[0] - q[0]) ** 2 + (p[1] - q[1]) ** 2


def naive_function_from_segment(seg, dim: GridDim) -> GridFunction:
    a, b = (tuple(p) for p in seg)
    for p in (a, b):
        if not (0 <= p[0] < dim.m and 0 <= p[1] < dim.n):
            raise PreconditionError(f"endpoint {p} is outside {dim}")
    if not _adjacent(a, b):
        raise PreconditionError(f"{a}->{b} is not a prime segment")
    bits = 0
    for y in range(dim.n):
        for x in range(dim.m):
            p = (x, y)
            if p == a:
                value = True
            elif p == b:
                value = False
            elif _det(a, b, p) == 0:
                value = _dist2(a, p) < _dist2(b, p)
            else:
                value = _det(a, b, p) > 0
            if value:
                bits |= 1 << (y * dim.m + x)
    return GridFunction(dim, bits)


@lru_cache(maxsize=None)
def naive_segment_table(dim: GridDim):
    pts = [(x, y) for x in range(dim.m) for y in range(dim.n)]
    return tuple(naive_function_from_segment((a, b), dim).bits
                 for a in pts for b in pts if _adjacent(a, b))


def naive_is_threshold(f: GridFunction) -> bool:
    if f.dim.size > NAIVE_THRESHOLD_LIMIT:
        raise GuardExceeded(f"naive threshold test is limited to {NAIVE_THRESHOLD_LIMIT} points")
    full = (1 << f.dim.size) - 1
    return f.bits in (0, full) or f.bits in naive_segment_table(f.dim)


def naive_is_two_threshold(f: GridFunction) -> bool:
    if f.dim.size > NAIVE_TWO_THRESHOLD_LIMIT:
        raise GuardExceeded(f"naive 2-threshold test is limited to {NAIVE_TWO_THRESHOLD_LIMIT} points")
    if naive_is_threshold(f):
        return True
    table = naive_segment_table(f.dim)
    return any(s & t == f.bits for s in table for t in table)

"""Text formats: grid documents and pair documents.

A grid document is a header ``"m n"`` followed by n rows of m characters
from ``{0,1}``; the first row is the top of the grid (y = n - 1).
A pair document is a JSON object ``{"m", "n", "pairs": [{"A","B","C","D"}]}``.
"""
import json
import re

from .errors import GridParseError
from .geometry import OrientedSegment, is_prime
from .threshold import GridDim, GridFunction
from .two_threshold import ProperPair

_HEADER = re.compile(r"([1-9][0-9]*) ([1-9][0-9]*)")


def parse_grid(text: str) -> GridFunction:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise GridParseError("empty document", line=1)
    match = _HEADER.fullmatch(lines[0])
    if not match:
        raise GridParseError(f"malformed header {lines[0]!r}, expected 'm n'", line=1)
    dim = GridDim(int(match.group(1)), int(match.group(2)))
    rows = lines[1:]
    for j, row in enumerate(rows[:dim.n]):
        lineno = j + 2
        bad = next((ch for ch in row if ch not in "01"), None)
        if bad is not None:
            raise GridParseError(f"illegal character {bad!r}", line=lineno)
        if len(row) != dim.m:
            raise GridParseError(f"row has {len(row)} characters, expected {dim.m}", line=lineno)
    if len(rows) != dim.n:
        raise GridParseError(f"expected {dim.n} rows, found {len(rows)}", line=min(len(rows), dim.n) + 2)
    bits = 0
    for j, row in enumerate(rows):
        y = dim.n - 1 - j
        for x, ch in enumerate(row):
            if ch == "1":
                bits |= 1 << (y * dim.m + x)
    return GridFunction(dim, bits)


def render_grid(f: GridFunction) -> str:
    m, n = f.dim.m, f.dim.n
    rows = ["".join("1" if f((x, y)) else "0" for x in range(m)) for y in reversed(range(n))]
    return f"{m} {n}\n" + "".join(row + "\n" for row in rows)


def pair_document(dim: GridDim, pairs) -> str:
    doc = {
        "m": dim.m,
        "n": dim.n,
        "pairs": [
            {"A": list(p.s1.a), "B": list(p.s1.b), "C": list(p.s2.a), "D": list(p.s2.b)}
            for p in pairs
        ],
    }
    return json.dumps(doc) + "\n"


def parse_pair_document(text: str):
    """Returns ``(dim, [ProperPair, ...])``; raises ValueError on bad content."""
    doc = json.loads(text)
    dim = GridDim(doc["m"], doc["n"])
    pairs = []
    for entry in doc["pairs"]:
        a, b, c, d = (tuple(entry[k]) for k in "ABCD")
        for p in (a, b, c, d):
            if p not in dim:
                raise ValueError(f"point {p} is outside {dim}")
        if not (is_prime(a, b) and is_prime(c, d)):
            raise ValueError(f"pair {entry} has a non-prime segment")
        pairs.append(ProperPair.of(OrientedSegment(a, b), OrientedSegment(c, d)))
    return dim, pairs

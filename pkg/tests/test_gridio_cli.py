import io
import json
import subprocess
import sys

import pytest
from hypothesis import given, strategies as st

from twothreshold import GridDim, GridFunction, GridParseError, pair_document, parse_grid, render_grid
from twothreshold.cli import run
from twothreshold.gridio import parse_pair_document

from conftest import tf

FIG4_DOC = "4 4\n1110\n1100\n1100\n1000\n"
FIG7_F_DOC = "4 4\n0110\n0110\n0000\n0000\n"
FIG7_G_DOC = "4 4\n0110\n0110\n0000\n0010\n"


def test_parse_examples():
    assert set(parse_grid("2 2\n01\n10\n").true_points()) == {(1, 1), (0, 0)}
    f = parse_grid("1 1\n1\n")
    assert f.dim == GridDim(1, 1) and f.bits == 1


def test_render_examples():
    assert render_grid(tf(2, 2, [(0, 0), (1, 1)])) == "2 2\n01\n10\n"
    assert render_grid(GridFunction.constant(GridDim(3, 2), False)) == "3 2\n000\n000\n"


@pytest.mark.parametrize("text, line, fragment", [
    ("", 1, "empty"),
    ("2x2\n01\n10\n", 1, "header"),
    ("2 2\n01\n1a\n", 3, "illegal character"),
    ("2 2\n011\n10\n", 2, "characters"),
    ("2 2\n01\n", 3, "rows"),
    ("2 2\n01\n10\n11\n", 4, "rows"),
    ("2 2\n01\n10\n\n", 4, "rows"),
])
def test_parse_diagnostics(text, line, fragment):
    with pytest.raises(GridParseError) as exc:
        parse_grid(text)
    assert exc.value.line == line
    assert fragment in str(exc.value)
    assert str(exc.value).startswith(f"line {line}:")


@st.composite
def functions(draw):
    m, n = draw(st.integers(1, 7)), draw(st.integers(1, 7))
    return GridFunction(GridDim(m, n), draw(st.integers(0, (1 << (m * n)) - 1)))


@given(functions())
def test_round_trip(f):
    text = render_grid(f)
    assert parse_grid(text) == f
    assert render_grid(parse_grid(text)) == text


def test_pair_document_round_trip():
    from twothreshold import OrientedSegment, ProperPair
    p = ProperPair.of(OrientedSegment((1, 1), (0, 1)), OrientedSegment((0, 0), (1, 0)))
    text = pair_document(GridDim(2, 2), [p])
    assert json.loads(text) == {"m": 2, "n": 2, "pairs": [{"A": [0, 0], "B": [1, 0], "C": [1, 1], "D": [0, 1]}]}
    assert parse_pair_document(text) == (GridDim(2, 2), [p])
    with pytest.raises(ValueError):
        parse_pair_document('{"m": 2, "n": 2, "pairs": [{"A": [0,0], "B": [5,0], "C": [1,1], "D": [0,1]}]}')


def call(argv, tmp_path=None, doc=None):
    if doc is not None:
        path = tmp_path / "f.txt"
        path.write_text(doc)
        argv = [a if a != "@" else str(path) for a in argv]
    out, err = io.StringIO(), io.StringIO()
    code = run(argv, out, err)
    return code, out.getvalue(), err.getvalue()


def test_cli_eval():
    assert call(["eval", "--grid", "4", "4", "--seg", "1", "1", "2", "2"]) == (0, FIG4_DOC, "")
    code, out, _ = call(["eval", "--grid", "4", "4", "--seg", "2", "2", "3", "3", "--seg", "1", "2", "2", "0"])
    assert (code, out) == (0, FIG7_F_DOC)


def test_cli_eval_errors():
    assert call(["eval", "--grid", "3", "3", "--seg", "0", "0", "2", "2"])[0] == 3
    assert call(["eval", "--grid", "3", "3", "--seg", "0", "0", "5", "1"])[0] == 3
    assert call(["eval", "--grid", "3", "3"])[0] == 2
    three = ["--seg", "0", "0", "0", "1"] * 3
    assert call(["eval", "--grid", "3", "3", *three])[0] == 2


@pytest.mark.parametrize("doc, expected", [
    (FIG7_G_DOC, "NotTwoThreshold\n"),
    (FIG7_F_DOC, "Proper2Threshold\n"),
    (FIG4_DOC, "Threshold\n"),
    ("2 1\n00\n", "ConstantZero\n"),
    ("2 1\n11\n", "ConstantOne\n"),
])
def test_cli_classify(tmp_path, doc, expected):
    assert call(["classify", "--in", "@"], tmp_path, doc) == (0, expected, "")


def test_cli_segment(tmp_path):
    assert call(["segment", "--in", "@"], tmp_path, FIG4_DOC) == (0, "A=(1,1) B=(2,2)\n", "")
    code, out, err = call(["segment", "--in", "@"], tmp_path, FIG7_F_DOC)
    assert code == 3 and out == "" and "not threshold" in err


def test_cli_pairs_and_canonical(tmp_path):
    expected = '{"m": 4, "n": 4, "pairs": [{"A": [1, 2], "B": [1, 1], "C": [2, 2], "D": [3, 3]}]}\n'
    assert call(["pairs", "--in", "@"], tmp_path, FIG7_F_DOC) == (0, expected, "")
    assert call(["pairs", "--in", "@", "--all"], tmp_path, FIG7_F_DOC) == (0, expected, "")
    assert call(["canonical", "--in", "@"], tmp_path, FIG7_F_DOC) == (0, expected, "")
    code, out, _ = call(["pairs", "--in", "@", "--all"], tmp_path, "5 5\n00000\n00000\n00100\n00000\n00000\n")
    assert code == 0 and len(json.loads(out)["pairs"]) == 8
    assert call(["canonical", "--in", "@"], tmp_path, FIG4_DOC)[0] == 3


def test_cli_essential(tmp_path):
    code, out, _ = call(["essential", "--in", "@", "--class", "2threshold"], tmp_path, FIG7_F_DOC)
    assert code == 0
    assert out == "(0,3)\n(1,1)\n(1,2)\n(2,1)\n(2,2)\n(3,3)\n"
    code, out, _ = call(["essential", "--in", "@", "--class", "threshold"], tmp_path, "2 2\n00\n10\n")
    assert code == 0 and "(0,0)" in out.split()
    assert call(["essential", "--in", "@", "--class", "threshold"], tmp_path, FIG7_F_DOC)[0] == 3


def test_cli_enumerate():
    assert call(["enumerate", "--grid", "3", "3", "--class", "threshold", "--count-only"])[1] == "56\n"
    assert call(["enumerate", "--grid", "3", "3", "--class", "2threshold", "--count-only"])[1] == "189\n"
    code, out, _ = call(["enumerate", "--grid", "2", "1", "--class", "threshold"])
    assert (code, out) == (0, "A=(0,0) B=(1,0)\n2 1\n10\n\nA=(1,0) B=(0,0)\n2 1\n01\n")
    code, out, _ = call(["enumerate", "--grid", "2", "1", "--class", "2threshold"])
    assert out.count("2 1\n") == 4
    assert call(["enumerate", "--grid", "6", "5", "--class", "2threshold"])[0] == 3


def test_cli_count_singleton():
    assert call(["count-singleton", "--grid", "9", "7", "--point", "4", "3"]) == (0, "20\n", "")
    assert call(["count-singleton", "--grid", "3", "3", "--point", "1", "1"]) == (0, "4\n", "")
    assert call(["count-singleton", "--grid", "3", "3", "--point", "0", "1"])[0] == 3


def test_cli_verify():
    code, out, _ = call(["verify", "--property", "claim_same_orient", "--grid", "3", "3"])
    report = json.loads(out)
    assert code == 0 and report["holds"] and report["failures"] == []
    assert (report["m"], report["n"]) == (3, 3)
    code, _, err = call(["verify", "--property", "nope"])
    assert code == 2 and "unknown property" in err
    assert call(["verify", "--property", "thm4_iff", "--grid", "9", "9"])[0] == 3


def test_cli_verify_failure_exit(monkeypatch):
    from twothreshold import properties

    def broken(dim, report):
        report.fail("forced")

    monkeypatch.setitem(properties._REGISTRY, "forced_failure", (broken, None))
    monkeypatch.setitem(properties.DEFAULT_DOMAINS, "forced_failure", GridDim(2, 2))
    code, out, _ = call(["verify", "--property", "forced_failure"])
    assert code == 1 and json.loads(out)["failures"] == ["forced"]


def test_cli_usage_and_io_errors(tmp_path):
    assert call([])[0] == 2
    assert call(["bogus"])[0] == 2
    assert call(["classify"])[0] == 2
    code, _, err = call(["classify", "--in", str(tmp_path / "missing.txt")])
    assert code == 2 and "cannot read" in err
    code, _, err = call(["classify", "--in", "@"], tmp_path, "2 2\n0x\n00\n")
    assert code == 3 and "line 2" in err


def test_cli_deterministic(tmp_path):
    argv = ["pairs", "--in", "@", "--all"]
    assert call(argv, tmp_path, FIG7_F_DOC) == call(argv, tmp_path, FIG7_F_DOC)


def test_console_entry_point():
    r = subprocess.run([sys.executable, "-m", "twothreshold", "count-singleton", "--grid", "9", "7",
                        "--point", "4", "3"], capture_output=True, text=True)
    assert (r.returncode, r.stdout) == (0, "20\n")

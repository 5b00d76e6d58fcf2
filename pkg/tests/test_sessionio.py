import json
from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from algkernel import QQ, GF, Ideal, PolyRing, SessionError
from algkernel.sessionio import (
    Result,
    ResultDocument,
    format_session,
    parse_polynomial,
    parse_session,
    poly_to_str,
    render,
    run_session,
)
from algkernel.sessionio import syntax as A
from algkernel.sessionio.parser import COMMANDS, ORDERINGS
from algkernel.sessionio.render import render_result, value_text

from strategies import polys

ROOT = Path(__file__).resolve().parent.parent
SESSIONS = sorted((ROOT / "sessions").glob("*.session"))
GOLDEN = Path(__file__).resolve().parent / "golden"
P0 = A.Pos(0, 0)

ELLIPSOID = ("ring R = QQ[x,y,z] degrevlex; "
             "ideal I = x^2+y^2+2*z^2-8, x^2-y^2-z^2+1, x-y+z; gb I lex;")


def test_ellipsoid_example_parses():
    tree = parse_session(ELLIPSOID)
    assert len(tree) == 3
    ring, ideal, cmd = tree.statements
    assert isinstance(ring, A.RingDecl) and ring.variables == ["x", "y", "z"]
    assert isinstance(ideal, A.IdealDecl) and len(ideal.polys) == 3
    assert isinstance(cmd, A.Command) and cmd.op == "gb" and len(cmd.args) == 2


def test_empty_input():
    assert len(parse_session("")) == 0
    assert len(parse_session("  # only a comment\n\n")) == 0


def test_dangling_operator():
    with pytest.raises(SessionError) as exc:
        parse_session("ring R = QQ[x];\nideal I = x+;")
    err = exc.value
    assert (err.line, err.column) == (2, 13)
    assert "number" in err.expected and "identifier" in err.expected


@pytest.mark.parametrize("text, line, col", [
    ("ring R = QQ[x];\ngb J;", 2, 4),
    ("gb x;", 1, 1),
    ("ring R = QQ[x];\npluecker 4, 0;", 2, 1),
    ("ring R = QQ[x, x];", 1, 10),
    ("ring R = ZZ[x];", 1, 10),
    ("ring R = QQ[x];\npoly f = 2x;", 2, 11),
    ("ring R = QQ[x];\nfrobnicate x;", 2, 1),
    ("ring R = QQ[x];\npoly f = x @ 2;", 2, 12),
])
def test_error_positions(text, line, col):
    with pytest.raises(SessionError) as exc:
        parse_session(text)
    assert (exc.value.line, exc.value.column) == (line, col)


def _in_bounds(text, err):
    lines = text.split("\n")
    return 1 <= err.line <= len(lines) and 1 <= err.column <= len(lines[err.line - 1]) + 1


@settings(max_examples=300)
@given(st.text())
def test_never_panics_on_arbitrary_text(text):
    try:
        parse_session(text)
    except SessionError as err:
        assert _in_bounds(text, err)


TOKENS = ["ring", "ideal", "poly", "gb", "R", "I", "=", "QQ", "[", "]", "x", "y", ",", ";", "+",
          "-", "*", "/", "^", "2", "(", ")", ":", "\n", " ", "#", "lex", "weights", "d", "=", "1"]


@settings(max_examples=300)
@given(st.lists(st.sampled_from(TOKENS), max_size=30))
def test_never_panics_on_token_soup(toks):
    text = " ".join(toks)
    try:
        parse_session(text)
    except SessionError as err:
        assert _in_bounds(text, err)


# -- random syntax trees

NAMES = ["x", "y", "z", "x_1", "t2", "I", "f"]


def _exprs():
    base = st.one_of(
        st.integers(0, 99).map(lambda n: A.Num(str(n), P0)),
        st.sampled_from(NAMES).map(lambda s: A.Name(s, P0)),
    )

    def extend(children):
        return st.one_of(
            st.tuples(st.sampled_from("+-*/"), children, children).map(lambda t: A.BinOp(t[0], t[1], t[2], P0)),
            children.map(lambda c: A.Neg(c, P0)),
            st.tuples(children, st.integers(0, 12)).map(lambda t: A.Pow(t[0], t[1], P0)),
        )

    return st.recursive(base, extend, max_leaves=8)


EXPRS = _exprs()
ARGS = st.one_of(
    EXPRS,
    st.tuples(st.lists(EXPRS, min_size=2, max_size=3), st.booleans()).map(lambda t: A.Point(t[0], t[1], P0)),
    st.lists(EXPRS, max_size=3).map(lambda items: A.ListExpr(items, P0)),
)


@st.composite
def statements(draw):
    kind = draw(st.sampled_from(["ring", "ideal", "poly", "matrix", "divisor", "command"]))
    name = draw(st.sampled_from(["R", "S", "I", "J", "f", "M", "D"]))
    if kind == "ring":
        variables = draw(st.lists(st.sampled_from(NAMES[:5]), min_size=1, max_size=4, unique=True))
        field = draw(st.sampled_from(["QQ", "Fp:7", "Fp:32003"]))
        ordering = draw(st.one_of(st.none(), st.sampled_from(ORDERINGS)))
        weights = draw(st.one_of(st.none(), st.lists(st.integers(1, 5), min_size=len(variables),
                                                     max_size=len(variables))))
        return A.RingDecl(name, field, variables, ordering, weights, P0)
    if kind == "ideal":
        return A.IdealDecl(name, draw(st.lists(EXPRS, max_size=3)), P0)
    if kind == "poly":
        return A.PolyDecl(name, draw(EXPRS), P0)
    if kind == "divisor":
        return A.DivisorDecl(name, draw(EXPRS), P0)
    if kind == "matrix":
        return A.MatrixDecl(name, draw(st.lists(st.lists(EXPRS, max_size=3), max_size=3)), P0)
    op = draw(st.sampled_from(sorted(COMMANDS)))
    lo, hi = COMMANDS[op]
    args = draw(st.lists(ARGS, min_size=lo, max_size=hi if hi is not None else lo + 2))
    options = draw(st.lists(st.tuples(st.sampled_from(["d", "e", "minimal", "name"]), EXPRS), max_size=2))
    return A.Command(op, args, [A.Option(k, v, P0) for k, v in options], P0)


@settings(max_examples=200)
@given(st.lists(statements(), max_size=6))
def test_format_parse_round_trip(stmts):
    tree = A.SessionAST(stmts)
    text = format_session(tree)
    again = parse_session(text, check=False)
    assert again == tree
    assert format_session(again) == text


def test_parenthesization_is_minimal_and_faithful():
    src = "poly f = -x^2 - (-y)^3 + (a - b) - (c - d) + x/(2*y) + (x^2)^3 + -(x*y)^2;"
    tree = parse_session(src, check=False)
    assert format_session(tree) == src + "\n"
    assert format_session(parse_session("poly f = ((x)) + ((y*z));", check=False)) == "poly f = x + y*z;\n"


@pytest.mark.parametrize("path", SESSIONS, ids=lambda p: p.stem)
def test_golden_canonical_forms(path):
    text = format_session(parse_session(path.read_text()))
    assert text == (GOLDEN / (path.stem + ".canonical")).read_text()
    # a canonical form is a fixed point
    assert format_session(parse_session(text)) == text


# -- rendering


def test_betti_rendering():
    doc = run_session("ring S = QQ[w,x,y,z];\n"
                      "ideal J = w^2-x*z, w*x-y*z, x^2-w*y, x*y-z^2, y^2-w*z;\nbetti J;")
    text = render(doc)
    assert "total: 1 5 5 1" in text
    row = [ln for ln in text.splitlines() if ln.startswith("2:")][0]
    assert row.split()[1:] == ["-", "-", "-", "1"]


def test_integer_rendering():
    r = Result("dim I", "integer", 6)
    assert value_text("integer", 6) == "6"
    assert json.loads(render_result(r, "json"))["value"] == 6
    assert json.loads(render_result(r, "json"))["kind"] == "integer"


def test_document_json_round_trip():
    doc = run_session(ELLIPSOID)
    back = ResultDocument.from_json(render(doc, "json"))
    assert back == doc
    assert json.loads(render(doc, "json"))["format_version"] == 1


@settings(max_examples=60)
@given(st.sampled_from([PolyRing(QQ, ["x", "y", "z"]), PolyRing(GF(7), ["x", "y_1"])]), st.data())
def test_polynomial_render_round_trip(ring, data):
    f = data.draw(polys(ring, max_terms=5, max_deg=4, coeffs=st.fractions(max_denominator=6)
                        if ring.field.characteristic == 0 else st.integers(-9, 9)))
    assert parse_polynomial(poly_to_str(f), ring) == f


@settings(max_examples=15)
@given(st.lists(polys(PolyRing(QQ, ["x", "y"]), max_terms=3, max_deg=2), min_size=1, max_size=3))
def test_ideal_render_round_trip(gens):
    ring = PolyRing(QQ, ["x", "y"])
    body = ", ".join(poly_to_str(g) for g in gens)
    doc = run_session("ring R = QQ[x,y];\nideal I = %s;\ngb I;" % body)
    value = doc.results[0].value
    G = [parse_polynomial(s, ring) for s in value["generators"]]
    assert Ideal(ring, G) == Ideal(ring, gens)

import pytest
from hypothesis import given
from hypothesis import strategies as st

from algkernel import GF, QQ, MultiPoly, PolyRing
from algkernel.orderings import (
    BlockOrdering,
    DegRevLex,
    Lex,
    NegWDegRevLex,
    PositionOverTerm,
    TermOverPosition,
    WDegRevLex,
    compare_monomials,
)
from algkernel.polyring import (
    FreeModElem,
    dehomogenize,
    homogenize,
    leading_term,
    taylor_part,
    weighted_degree,
)

from strategies import polys

R = PolyRing(QQ, ["x1", "x2", "x3"])
x1, x2, x3 = R.gens()
exps = st.lists(st.integers(0, 6), min_size=3, max_size=3).map(tuple)
orderings = st.sampled_from([
    Lex(3), DegRevLex(3), WDegRevLex(3, (1, 2, 3)), NegWDegRevLex(3, (1, 1, 1)),
    BlockOrdering(3, [(DegRevLex(1), (1,)), (Lex(2), (0, 2))]),
])


def test_paper_comparisons():
    assert compare_monomials(Lex(3), (2, 0, 0), (1, 1, 0)) == 1
    assert compare_monomials(DegRevLex(3), (0, 2, 0), (1, 0, 1)) == 1
    assert compare_monomials(WDegRevLex(3, (2, 1, 1)), (1, 0, 0), (0, 1, 0)) == 1
    assert compare_monomials(Lex(3), (1, 2, 3), (1, 2, 3)) == 0
    with pytest.raises(ValueError):
        compare_monomials(Lex(3), (1, 2), (1, 2, 3))


def test_globality():
    for o in (Lex(3), DegRevLex(3), WDegRevLex(3, (1, 2, 3))):
        assert o.is_global
    assert not NegWDegRevLex(3, (1, 1, 1)).is_global
    assert NegWDegRevLex(3, (1, 1, 1)).is_local


@given(orderings, exps, exps, exps)
def test_orderings_multiplicative(o, a, b, c):
    ac = tuple(map(sum, zip(a, c)))
    bc = tuple(map(sum, zip(b, c)))
    assert compare_monomials(o, a, b) == compare_monomials(o, ac, bc)
    assert compare_monomials(o, a, b) == -compare_monomials(o, b, a)


@given(st.sampled_from([TermOverPosition, PositionOverTerm]), exps, exps, st.integers(0, 3), st.integers(0, 3))
def test_module_orderings_compatible(kind, a, b, i, j):
    m = kind(DegRevLex(3))
    left = m.key((i,) + a) > m.key((i,) + b)
    right = m.key((j,) + a) > m.key((j,) + b)
    assert left == right


def test_leading_terms():
    c, e = leading_term(x2 - x1**2)
    assert (c, e) == (-1, (2, 0, 0))
    assert leading_term(x1 * x2 - x3)[1] == (1, 1, 0)
    assert leading_term(3 * x1**2 * x2)[0] == 3
    with pytest.raises(ValueError):
        leading_term(R.zero())


def test_arithmetic_examples():
    x, y = x1, x2
    assert (x + y) + (x - y) == 2 * x
    assert (x + y) * R.zero() == R.zero()
    assert (x + y) * (x - y) == x**2 - y**2
    assert str((x + y) * (x - y)) == "x1^2 - x2^2"


def test_ring_mismatch():
    S = PolyRing(QQ, ["a", "b"])
    with pytest.raises((TypeError, ValueError)):
        x1 + S.gens()[0]


def test_ring_validation():
    with pytest.raises(ValueError):
        PolyRing(QQ, ["x", "x"])
    with pytest.raises(ValueError):
        PolyRing(QQ, ["x", "y"], weights=[1, 0])


def test_homogenize_twisted_cubic():
    S = R.extend("x0", 0)
    h = homogenize(x2 - x1**2, S, 0)
    x0, y1, y2, _ = S.gens()
    assert h == x0 * y2 - y1**2
    assert homogenize(R(7), S, 0) == S(7)
    assert dehomogenize(h, R, 0) == x2 - x1**2


@given(polys(R, max_terms=5, max_deg=4))
def test_homogenize_round_trip(f):
    S = R.extend("h", 3)
    h = homogenize(f, S, 3)
    assert h.is_homogeneous()
    assert dehomogenize(h, R, 3) == f


def test_degrees_and_taylor():
    x, y = x1, x2
    assert weighted_degree(x**3 * y + y**2) == 4
    assert taylor_part(y**2 - x**3, 2) == y**2
    assert taylor_part(y**2 - x**3, 5) == R.zero()
    with pytest.raises(ValueError):
        weighted_degree(R.zero())
    W = PolyRing(QQ, ["a", "b"], weights=[2, 3])
    a, b = W.gens()
    assert weighted_degree(a**3 + b) == 6


@given(polys(R), polys(R), polys(R))
def test_ring_axioms(f, g, h):
    assert (f + g) + h == f + (g + h)
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f - f == R.zero()
    assert f * g == g * f


@given(polys(R, max_terms=6))
def test_canonical_parse(f):
    terms = [str(MultiPoly(R, {e: c})) for e, c in f.coeffs.items()]
    fwd = R.parse(" + ".join(terms) or "0")
    rev = R.parse(" + ".join(reversed(terms)) or "0")
    assert fwd == rev == f
    assert fwd.terms() == f.terms()
    assert R.parse(str(f)) == f


def test_terms_sorted_strictly():
    f = x1**2 + x2 * x3 + x3 + 5
    mons = [e for _, e in f.terms()]
    keys = [R.ordering.key(e) for e in mons]
    assert keys == sorted(keys, reverse=True) and len(set(keys)) == len(keys)


def test_prime_field_coefficients():
    F = PolyRing(GF(5), ["x", "y"])
    x, y = F.gens()
    assert (x + y) ** 5 == x**5 + y**5
    assert F.parse("1/2*x") == 3 * x


def test_free_module_elements():
    v = FreeModElem.from_components(R, [x1, R.zero(), x2**2])
    assert v.rank == 3 and v[1] == R.zero()
    w = v + v
    assert w[2] == 2 * x2**2
    assert (x3 * v)[0] == x1 * x3
    with pytest.raises(ValueError):
        v + FreeModElem.from_components(R, [x1])


def test_derivative_and_substitution():
    f = x1**3 * x2 + x3
    assert f.derivative("x1") == 3 * x1**2 * x2
    assert f.evaluate([1, 2, 3]) == 5
    assert f.translate([1, 0, 0]) == (x1 + 1) ** 3 * x2 + x3

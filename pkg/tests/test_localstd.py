import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from algkernel import GF, QQ, AlgKernelError, Ideal, InfiniteError, OrderingError, PolyRing
from algkernel.gbasis import monomials_outside
from algkernel.localstd import (
    INFINITE,
    curve_multiplicity,
    intersection_multiplicity,
    local_dim,
    local_ordering,
    milnor_tjurina,
    mora_normal_form,
    standard_basis,
)
from algkernel.orderings import DegRevLex, NegWDegRevLex

from strategies import nonzero_polys

A = PolyRing(QQ, ["x", "y"])
x, y = A.gens()
QUINTIC = A.parse("-3*x^5 - 2*x^4*y - 3*x^3*y^2 + x*y^4 + 3*y^5 + 6*x^4 + 7*x^3*y"
                  " + 3*x^2*y^2 - 2*x*y^3 - 6*y^4 - 3*x^3 - 5*x^2*y + x*y^2 + 3*y^3")
QUARTIC = (x - y) * ((x + y) ** 2 - (x - y) ** 3) - (x + y) ** 4
CUBIC = y**2 - x**2 + 3 * x**3


def mora_identity(f, G, res):
    total = res.remainder
    for q, g in zip(res.quotients, G):
        total = total + q * g
    return res.unit * f == total and res.unit.constant_coefficient() != 0


def test_mora_unit_example():
    G = [x - x**2]
    res = mora_normal_form(x, G)
    assert res.remainder == A.zero()
    assert mora_identity(x, G, res)
    assert res.unit != A.one()


def test_mora_trivial_cases():
    res = mora_normal_form(A.one(), [x])
    assert res.remainder == A.one() and res.unit == A.one()
    f = x * y + y**3
    res = mora_normal_form(f, [f])
    assert res.remainder == A.zero() and res.quotients[0] * res.unit.constant_coefficient() != A.zero()


def test_mora_rejects_global():
    with pytest.raises(OrderingError):
        mora_normal_form(x, [y], DegRevLex(2))


@settings(max_examples=30)
@given(nonzero_polys(A, max_terms=4, max_deg=4),
       st.lists(nonzero_polys(A, max_terms=3, max_deg=3), min_size=1, max_size=3))
def test_mora_identity_property(f, G):
    res = mora_normal_form(f, G)
    assert mora_identity(f, G, res)
    o = local_ordering(A)
    lts = [g.leading_monomial(o) for g in G]
    # weak normal form: only the leading term is guaranteed irreducible
    if res.remainder:
        e = res.remainder.leading_monomial(o)
        assert not any(all(a <= b for a, b in zip(lt, e)) for lt in lts)


def test_local_dim_examples():
    r = local_dim(Ideal(A, [x, y]))
    assert r.dimension == 1 and r.standard_monomials == [(0, 0)]
    r = local_dim(Ideal(A, [y**2 - x**3, 2 * y**2 - x**3]))
    assert r.dimension == 6
    assert local_dim(Ideal(A, [x])).dimension == INFINITE


def test_standard_basis_leading_ideal():
    SB = standard_basis(Ideal(A, [y**2 - x**3, 2 * y**2 - x**3]))
    lms = {g.leading_monomial(local_ordering(A)) for g in SB}
    assert set(monomials_outside(sorted(lms), 2)) == {(i, j) for i in range(3) for j in range(2)}


@settings(max_examples=25)
@given(st.lists(nonzero_polys(A, max_terms=3, max_deg=4), min_size=2, max_size=3))
def test_truncated_matches_mora(gens):
    I = Ideal(A, gens)
    mora = local_dim(I, method="mora")
    if mora.dimension == INFINITE:
        # the certificate can never hold for a non-isolated point
        with pytest.raises(InfiniteError):
            local_dim(I, method="truncated", max_monomials=20_000)
    else:
        trunc = local_dim(I, method="truncated", max_monomials=20_000)
        assert trunc.dimension == mora.dimension
        assert sorted(trunc.standard_monomials) == sorted(mora.standard_monomials)
    assert local_dim(I).dimension == mora.dimension


def test_truncated_three_variables():
    R = PolyRing(GF(32003), ["x", "y", "z"])
    a, b, c = R.gens()
    # semi-quasi-homogeneous: mu = (8-1)(7-1)(9-1) regardless of the higher-weight term
    f = a**8 + b**7 + c**9 + a**3 * b**3 * c**3
    jac = Ideal(R, [f.derivative(i) for i in range(3)])
    assert local_dim(jac, method="truncated").dimension == 7 * 6 * 8
    assert local_dim(jac).dimension == 7 * 6 * 8
    g = a**4 + b**3 + c**5 + a**2 * b * c**2
    jac = Ideal(R, [g.derivative(i) for i in range(3)])
    assert local_dim(jac, method="truncated").dimension == local_dim(jac, method="mora").dimension == 24


def test_truncated_needs_degree_ordering():
    with pytest.raises(OrderingError):
        local_dim(Ideal(A, [x, y]), NegWDegRevLex(2, [2, 3]), method="truncated")


def test_intersection_multiplicity_examples():
    assert intersection_multiplicity(y**2 - x**3, 2 * y**2 - x**3) == 6
    assert intersection_multiplicity(x, y) == 1
    assert intersection_multiplicity(QUARTIC, CUBIC) == 8
    assert intersection_multiplicity(x * y, x) == INFINITE


def test_intersection_multiplicity_field_check():
    with pytest.raises(ValueError):
        intersection_multiplicity(x, y, (0, 0, 0))


@settings(max_examples=20)
@given(nonzero_polys(A, max_terms=3, max_deg=3), nonzero_polys(A, max_terms=3, max_deg=3),
       st.tuples(st.integers(-2, 2), st.integers(-2, 2)))
def test_imult_symmetry_and_bound(f, g, p):
    f = f - f.evaluate(list(p))
    g = g - g.evaluate(list(p))
    if not f or not g:
        return
    i = intersection_multiplicity(f, g, p)
    assert i == intersection_multiplicity(g, f, p)
    mf, mg = curve_multiplicity(f, p)[0], curve_multiplicity(g, p)[0]
    assert i >= mf * mg
    # translation invariance
    F, G = f.translate(list(p)), g.translate(list(p))
    assert intersection_multiplicity(F, G) == i


def test_curve_multiplicity_examples():
    m, cone, ordinary = curve_multiplicity(x**2 - y**2)
    assert (m, ordinary) == (2, True)
    assert cone == x**2 - y**2
    assert curve_multiplicity(x + y**2)[0::2] == (1, False)
    assert curve_multiplicity(y**2 - x**3)[0::2] == (2, False)
    F = A.parse("x^3 + y^3 + x^5 - y^4")
    assert curve_multiplicity(F)[0::2] == (3, True)
    assert curve_multiplicity(QUINTIC)[0] == 3
    for p in [(0, 1), (1, 0), (1, 1)]:
        assert curve_multiplicity(QUINTIC, p)[0] == 2


def test_curve_multiplicity_zero():
    with pytest.raises(AlgKernelError):
        curve_multiplicity(A.zero())


def test_milnor_tjurina():
    assert milnor_tjurina(y**2 - x**3) == (2, 2)
    assert milnor_tjurina(x**2 + y**2) == (1, 1)
    assert milnor_tjurina(x**2) == (INFINITE, INFINITE)
    assert milnor_tjurina((y - 1) ** 2 - x**3, (0, 1)) == (2, 2)
    mu, tau = milnor_tjurina(x**4 + y**5 + x**2 * y**2)
    assert tau <= mu


def test_milnor_three_variables_small():
    R = PolyRing(GF(32003), ["x", "y", "z"])
    a, b, c = R.gens()
    assert milnor_tjurina(a**2 + b**3 + c**4) == (6, 6)


@pytest.mark.slow
def test_milnor_family_f0():
    R = PolyRing(GF(32003), ["x", "y", "z"])
    a, b, c = R.gens()
    f = a**40 + b**30 + c**24 + a**10 * b**7 + a**7 * b**7 * c**3 + a**6 * b**12
    assert curve_multiplicity(f)[0] == 17
    jac = Ideal(R, [f.derivative(i) for i in range(3)])
    assert local_dim(jac).dimension == 10661

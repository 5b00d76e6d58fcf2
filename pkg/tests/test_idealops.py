from itertools import combinations, product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from algkernel import QQ, AlgKernelError, Ideal, PolyRing
from algkernel.gbasis import ideal_membership, leading_ideal
from algkernel.idealops import (
    affine_dim,
    colon,
    eliminate,
    ideal_equal,
    intersect,
    projective_closure,
    saturate,
)

from strategies import ideals

P3 = PolyRing(QQ, ["x0", "x1", "x2", "x3"])
x0, x1, x2, x3 = P3.gens()
TC_PROJ = [x1**2 - x0 * x2, x1 * x2 - x0 * x3, x2**2 - x1 * x3]
J1 = [x0 * x2 - x1**2, x0 * x3 - x1 * x2]

R = PolyRing(QQ, ["x", "y", "z"])
x, y, z = R.gens()
TC_AFF = [y - x**2, z - x**3]

small_ideals = ideals(R, max_gens=2, max_terms=3, max_deg=2)


def test_intersect_coordinate_planes():
    K = intersect(Ideal(P3, [x0, x1]), Ideal(P3, [x2, x3]))
    assert ideal_equal(K, Ideal(P3, [x0 * x2, x1 * x2, x0 * x3, x1 * x3]))


def test_intersect_principal():
    K = intersect(Ideal(R, [x]), Ideal(R, [y]))
    assert ideal_equal(K, Ideal(R, [x * y]))


def test_intersect_self():
    I = Ideal(R, TC_AFF)
    assert ideal_equal(intersect(I, I), I)


def test_ring_mismatch():
    with pytest.raises(ValueError):
        intersect(Ideal(R, [x]), Ideal(P3, [x0]))


@settings(max_examples=15)
@given(small_ideals, small_ideals)
def test_intersect_properties(a, b):
    I, J = Ideal(R, a), Ideal(R, b)
    K = intersect(I, J)
    for f in K.generators:
        assert ideal_membership(f, I) and ideal_membership(f, J)
    for f, g in product(a, b):
        assert ideal_membership(f * g, K)


def test_colon_examples():
    assert ideal_equal(colon(Ideal(R, [x * y]), Ideal(R, [y])), Ideal(R, [x]))
    C = colon(Ideal(P3, J1), Ideal(P3, TC_PROJ))
    assert ideal_membership(x0, C) and ideal_membership(x1, C)


def test_colon_by_zero():
    with pytest.raises(AlgKernelError):
        colon(Ideal(R, [x]), Ideal(R, []))
    with pytest.raises(AlgKernelError):
        saturate(Ideal(R, [x]), Ideal(R, []))


def _monomials(n, d):
    return [e for e in product(range(d + 1), repeat=n) if sum(e) <= d]


@settings(max_examples=12)
@given(small_ideals, small_ideals)
def test_colon_properties(a, b):
    I, J = Ideal(R, a), Ideal(R, b)
    Q = colon(I, J)
    for f in Q.generators:
        for g in b:
            assert ideal_membership(f * g, I)
    # brute force over monomials: anything multiplying J into I is in the colon
    for e in _monomials(3, 2):
        m = R.monomial(e)
        if all(ideal_membership(m * g, I) for g in b):
            assert ideal_membership(m, Q)


def test_saturate_twisted_cubic():
    S, m = saturate(Ideal(P3, J1), Ideal(P3, [x0]))
    assert ideal_equal(S, Ideal(P3, TC_PROJ))
    assert m >= 1
    assert ideal_equal(colon(S, Ideal(P3, [x0])), S)


@settings(max_examples=10)
@given(small_ideals)
def test_saturate_stable(a):
    I, J = Ideal(R, a), Ideal(R, [x, y])
    S, m = saturate(I, J)
    assert ideal_equal(colon(S, J), S)
    for f in a:
        assert ideal_membership(f, S)


def test_eliminate_circle():
    C = PolyRing(QQ, ["x", "y", "t"])
    cx, cy, t = C.gens()
    I = Ideal(C, [cx**2 + cy**2 - 1, cy - t * cx - 1])
    Ey = eliminate(I, ["y"])
    assert ideal_equal(Ey, Ideal(C, [cx * ((1 + t**2) * cx + 2 * t)]))
    Ex = eliminate(I, ["x"])
    assert ideal_equal(Ex, Ideal(C, [((1 + t**2) * cy - (1 - t**2)) * (cy - 1)]))
    assert eliminate(I, []) == I


def test_eliminate_all():
    with pytest.raises(AlgKernelError):
        eliminate(Ideal(R, [x]), ["x", "y", "z"])


@settings(max_examples=15)
@given(small_ideals, st.sampled_from([["x"], ["y"], ["x", "z"]]))
def test_eliminate_properties(a, names):
    I = Ideal(R, a)
    E = eliminate(I, names)
    idx = [R.index(v) for v in names]
    for g in E.generators:
        assert not any(e[i] for e in g.coeffs for i in idx)
        assert ideal_membership(g, I)


def test_affine_dim_examples():
    assert affine_dim(Ideal(R, TC_AFF)) == 1
    assert affine_dim(Ideal(R, [x * y, y * z])) == 2
    assert affine_dim(Ideal(R, [R.one()])) == -1
    assert affine_dim(Ideal(R, [])) == 3


def _brute_dim(lms, n):
    for size in range(n, -1, -1):
        for S in combinations(range(n), size):
            if not any(all(i in S for i, e in enumerate(m) if e) for m in lms):
                return size
    return -1


@given(small_ideals)
def test_affine_dim_leading_ideal(a):
    I = Ideal(R, a)
    L = leading_ideal(I)
    assert affine_dim(L) == affine_dim(I)
    if any(g.is_constant() and g for g in L.generators):
        return
    lms = [next(iter(g.coeffs)) for g in L.generators]
    assert affine_dim(L) == _brute_dim(lms, 3)


def test_projective_closure_twisted_cubic():
    C = projective_closure(Ideal(R, TC_AFF), name="w")
    assert len(C.generators) == 3
    w, cx, cy, cz = C.ring.gens()
    expected = [cx**2 - w * cy, cx * cy - w * cz, cy**2 - cx * cz]
    assert ideal_equal(C, Ideal(C.ring, expected))
    for g in C.generators:
        assert len({sum(e) for e in g.coeffs}) == 1


def test_projective_closure_homogeneous_input():
    I = Ideal(R, [x * y - z**2])
    C = projective_closure(I, name="w")
    w, cx, cy, cz = C.ring.gens()
    assert ideal_equal(C, Ideal(C.ring, [cx * cy - cz**2]))


@settings(max_examples=10)
@given(small_ideals)
def test_projective_closure_saturated(a):
    C = projective_closure(Ideal(R, a), name="w")
    S, _ = saturate(C, Ideal(C.ring, [C.ring.gens()[0]]))
    assert ideal_equal(S, C)

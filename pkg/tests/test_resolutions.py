import random
from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from algkernel import QQ, AlgKernelError, Ideal, PolyRing
from algkernel.modsyz import PolyMatrix, subquotient
from algkernel.resolutions import (
    BettiTable,
    betti_table,
    free_resolution,
    hilbert_data,
    hilbert_function,
    minimal_betti,
    minimize,
    staircase_hilbert_function,
)

from strategies import graded_ideals

S = PolyRing(QQ, ["w", "x", "y", "z"])
w, x, y, z = S.gens()
FIVE = [w**2 - x * z, w * x - y * z, x**2 - w * y, x * y - z**2, y**2 - w * z]
CI = [w * x - y * z, w**2 + x**2 - y**2 - z**2]


def shape(res):
    return res.shape()


def test_five_quadrics_schreyer_shape():
    res = free_resolution(Ideal(S, FIVE))
    assert res.is_complex() and res.is_graded()
    assert shape(res) == [{0: 1}, {2: 5}, {3: 5, 4: 1}, {4: 1, 5: 1}]
    b = betti_table(res)
    assert b.display_entry(2, 2) == 1 and b.display_entry(3, 1) == 1


def test_five_quadrics_minimized():
    res = free_resolution(Ideal(S, FIVE))
    m = minimize(res)
    assert m.is_complex() and m.is_minimal()
    assert shape(m) == [{0: 1}, {2: 5}, {3: 5}, {5: 1}]
    expected = BettiTable({(0, 0): 1, (1, 2): 5, (2, 3): 5, (3, 5): 1})
    assert betti_table(m) == expected
    assert minimal_betti(res) == expected
    assert minimal_betti(Ideal(S, FIVE)) == expected


def test_minimize_idempotent():
    m = minimize(free_resolution(Ideal(S, FIVE)))
    assert shape(minimize(m)) == shape(m)


def test_complete_intersection():
    res = minimize(free_resolution(Ideal(S, CI)))
    assert shape(res) == [{0: 1}, {2: 2}, {4: 1}]
    h = hilbert_data(Ideal(S, CI))
    assert h.hilbert_polynomial == [Fraction(0), Fraction(4)]
    assert (h.dimension, h.degree, h.arithmetic_genus) == (1, 4, 1)


def test_five_points_hilbert():
    I = Ideal(S, FIVE)
    assert [hilbert_function(I, d) for d in (0, 1, 2, 3)] == [1, 4, 5, 5]
    h = hilbert_data(I)
    assert h.hilbert_polynomial == [Fraction(5)] and h.degree == 5 and h.dimension == 0


def test_free_module():
    res = free_resolution(subquotient(PolyMatrix.identity(S, 2), PolyMatrix.zero(S, 2, 0)))
    assert res.length == 0 or all(m.ncols == 0 for m in res.maps)
    assert hilbert_function(Ideal(S, []), 3) == comb(3 + 3, 3)
    assert minimal_betti(Ideal(S, [])) == BettiTable({(0, 0): 1})


def test_redundant_free_presentation_minimizes_away():
    P = PolyMatrix(S, [[S.one(), S.zero()], [S.zero(), S.one()]])
    res = minimize(free_resolution(P))
    assert all(r == 0 for r in res.ranks)


def test_nonhomogeneous_graded_error():
    with pytest.raises(AlgKernelError):
        free_resolution(Ideal(S, [w**2 - x]))


def test_ungraded_resolution_complex():
    res = free_resolution(Ideal(S, [w**2 - x, x * y - 1]), graded=False)
    assert res.is_complex()
    assert res.length <= S.ngens


def _rings():
    return [PolyRing(QQ, ["a", "b", "c", "d"][:n]) for n in (1, 2, 3, 4)]


@settings(max_examples=30)
@given(st.data())
def test_resolution_properties(data):
    R = data.draw(st.sampled_from(_rings()))
    gens = data.draw(graded_ideals(R, max_gens=3, max_deg=3))
    I = Ideal(R, gens)
    res = free_resolution(I)
    assert res.is_complex()
    assert res.length <= R.ngens
    m = minimize(res)
    assert m.is_complex() and m.is_minimal()
    assert minimal_betti(res) == betti_table(m)
    top = max(j for t in res.twists for j in t)
    for d in range(0, 2 * top + 1):
        h = hilbert_function(res, d)
        assert h == hilbert_function(m, d) == staircase_hilbert_function(I, d)
    data_ = hilbert_data(res)
    for d in range(top, top + 4):
        assert data_(d) == hilbert_function(res, d)


def test_hilbert_vs_staircase_random_sweep():
    rng = random.Random(20240)
    checked = 0
    while checked < 50:
        n = rng.randint(1, 4)
        R = PolyRing(QQ, ["a", "b", "c", "d"][:n])
        gens = []
        for _ in range(rng.randint(1, 3)):
            deg = rng.randint(1, 3)
            f = R.zero()
            for _ in range(rng.randint(1, 3)):
                e = [0] * n
                for _ in range(deg):
                    e[rng.randrange(n)] += 1
                f = f + R.monomial(tuple(e), rng.choice([-2, -1, 1, 3]))
            if f:
                gens.append(f)
        if not gens:
            continue
        I = Ideal(R, gens)
        res = free_resolution(I)
        assert res.is_complex() and res.length <= n
        for d in range(13):
            assert hilbert_function(res, d) == staircase_hilbert_function(I, d)
        checked += 1

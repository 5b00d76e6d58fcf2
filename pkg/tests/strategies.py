"""Hypothesis strategies for small polynomials and ideals."""
from hypothesis import strategies as st

from algkernel import GF, QQ, PolyRing


def rings(max_vars=3, prime=None):
    names = ["x", "y", "z", "w"]

    def build(n):
        return PolyRing(GF(prime) if prime else QQ, names[:n])

    return st.integers(1, max_vars).map(build)


def _clamp(e, max_deg):
    e = list(e)
    while sum(e) > max_deg:
        e[e.index(max(e))] -= 1
    return tuple(e)


def monomials(n, max_deg):
    return st.lists(st.integers(0, max_deg), min_size=n, max_size=n).map(lambda e: _clamp(e, max_deg))


def _degree_exactly(e, d):
    e = list(_clamp(e, d))
    e[0] += d - sum(e)
    return tuple(e)


def polys(ring, max_terms=4, max_deg=3, coeffs=st.integers(-5, 5)):
    terms = st.lists(st.tuples(coeffs, monomials(ring.ngens, max_deg)), max_size=max_terms)
    return terms.map(lambda ts: sum((ring.monomial(e, c) for c, e in ts), ring.zero()))


def nonzero_polys(ring, max_terms=4, max_deg=3):
    nz = st.integers(-5, 5).filter(bool)
    terms = st.lists(st.tuples(nz, monomials(ring.ngens, max_deg)), min_size=1, max_size=max_terms)
    return terms.map(lambda ts: sum((ring.monomial(e, c) for c, e in ts), ring.zero())).filter(bool)


def homogeneous_polys(ring, degree, max_terms=3):
    mons = st.lists(st.integers(0, degree), min_size=ring.ngens, max_size=ring.ngens).map(
        lambda e: _degree_exactly(e, degree))
    terms = st.lists(st.tuples(st.integers(-3, 3).filter(bool), mons), min_size=1, max_size=max_terms)
    return terms.map(lambda ts: sum((ring.monomial(e, c) for c, e in ts), ring.zero())).filter(bool)


@st.composite
def ideals(draw, ring, max_gens=3, **kw):
    return draw(st.lists(nonzero_polys(ring, **kw), min_size=1, max_size=max_gens))


@st.composite
def graded_ideals(draw, ring, max_gens=3, max_deg=3):
    gens = []
    for _ in range(draw(st.integers(1, max_gens))):
        gens.append(draw(homogeneous_polys(ring, draw(st.integers(1, max_deg)))))
    return gens

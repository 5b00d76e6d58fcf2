"""Division with remainder, Buchberger's algorithm, normal forms and staircases."""
from __future__ import annotations

import threading
from dataclasses import dataclass, field
from operator import le
from typing import Sequence

from . import _engine as E
from .errors import InfiniteError, NotGroebnerError, OrderingError
from .orderings import ModuleOrdering, MonomialOrdering, TermOverPosition
from .polyring import FreeModElem, MultiPoly, PolyRing

__all__ = [
    "DivisionResult",
    "GroebnerBasis",
    "Ideal",
    "divide_with_remainder",
    "buchberger",
    "reduce_gb",
    "normal_form",
    "leading_ideal",
    "standard_monomials",
    "monomials_outside",
    "ideal_membership",
    "is_one",
    "check_criterion",
]


# ---------------------------------------------------------------- conversions


def module_ordering(ordering) -> ModuleOrdering:
    """Wrap a ring ordering so it acts on rank-1 module monomials."""
    if isinstance(ordering, ModuleOrdering):
        return ordering
    return _rank_one(ordering)


_wrapped: dict = {}


def _rank_one(ordering: MonomialOrdering) -> ModuleOrdering:
    w = _wrapped.get(ordering)
    if w is None:
        w = _wrapped[ordering] = TermOverPosition(ordering)
    return w


def to_vec(f: MultiPoly | FreeModElem) -> dict:
    if isinstance(f, FreeModElem):
        return dict(f.coeffs)
    return {(0,) + e: c for e, c in f.coeffs.items()}


def from_vec(d: dict, ring: PolyRing, rank: int | None) -> MultiPoly | FreeModElem:
    if rank is None:
        return MultiPoly(ring, {m[1:]: c for m, c in d.items()})
    return FreeModElem(ring, rank, d)


def ring_poly(d: dict, ring: PolyRing) -> MultiPoly:
    """Quotient dict (component-0 monomials) as a polynomial."""
    return MultiPoly(ring, {m[1:]: c for m, c in d.items()})


def _rank_of(f) -> int | None:
    return f.rank if isinstance(f, FreeModElem) else None


# ---------------------------------------------------------------- results


@dataclass
class DivisionResult:
    """``unit * f = sum(quotients[i] * divisors[i]) + remainder``."""

    quotients: list
    remainder: MultiPoly | FreeModElem
    unit: MultiPoly


@dataclass
class GroebnerBasis:
    ordering: MonomialOrdering | ModuleOrdering
    elements: list
    minimal: bool = True
    reduced: bool = False
    ring: PolyRing | None = None
    rank: int | None = None

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __getitem__(self, i):
        return self.elements[i]

    @property
    def key(self):
        return module_ordering(self.ordering).key

    def vectors(self) -> list[dict]:
        return [to_vec(g) for g in self.elements]

    def engine_elems(self) -> list[E.Elem]:
        key = self.key
        return [E.Elem(v, key) for v in self.vectors()]

    def leading_monomials(self) -> list[tuple]:
        """Leading module monomials ``(component, *exps)``."""
        return [e.lm for e in self.engine_elems()]


# ---------------------------------------------------------------- ideals


class Ideal:
    """Ideal given by generators, caching one Groebner basis per ordering."""

    def __init__(self, ring: PolyRing, generators: Sequence = ()):
        self.ring = ring
        gens = [ring(g) for g in generators]
        self.generators = [g for g in gens if g]
        self._gb_cache: dict = {}
        self._lock = threading.Lock()

    @property
    def gens(self) -> list[MultiPoly]:
        return self.generators

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __repr__(self):
        return "Ideal(%s)" % ", ".join(str(g) for g in self.generators)

    def groebner_basis(self, ordering: MonomialOrdering | None = None, reduced: bool = False) -> GroebnerBasis:
        ordering = ordering or self.ring.ordering
        if not ordering.is_global:
            raise OrderingError("Groebner bases need a global ordering; use localstd.standard_basis")
        ck = (ordering, reduced)
        with self._lock:
            hit = self._gb_cache.get(ck)
        if hit is not None:
            return hit
        if reduced:
            G = reduce_gb(self.groebner_basis(ordering))
        else:
            G = _buchberger_vectors(self.ring, None, [to_vec(g) for g in self.generators], ordering)
        with self._lock:
            # identical key means identical (canonical) result: last writer wins
            self._gb_cache[ck] = G
        return G

    def cached_orderings(self) -> list:
        with self._lock:
            return [k[0] for k in self._gb_cache]

    def __contains__(self, f) -> bool:
        return ideal_membership(self.ring(f), self)

    def __add__(self, other: "Ideal") -> "Ideal":
        _same_ring(self, other)
        return Ideal(self.ring, self.generators + other.generators)

    def __mul__(self, other: "Ideal") -> "Ideal":
        _same_ring(self, other)
        return Ideal(self.ring, [f * g for f in self.generators for g in other.generators])

    def __pow__(self, e: int) -> "Ideal":
        if e < 0:
            raise ValueError("negative ideal power")
        out = Ideal(self.ring, [self.ring.one()])
        for _ in range(e):
            out = Ideal(self.ring, reduce_gb((out * self).groebner_basis()).elements)
        return out

    def is_subset(self, other: "Ideal") -> bool:
        _same_ring(self, other)
        return all(ideal_membership(g, other) for g in self.generators)

    def __eq__(self, other):
        if not isinstance(other, Ideal) or other.ring != self.ring:
            return NotImplemented
        a = reduce_gb(self.groebner_basis()).elements
        b = reduce_gb(other.groebner_basis()).elements
        return [g.coeffs for g in a] == [g.coeffs for g in b]

    __hash__ = None

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.generators)


def _same_ring(I: Ideal, J: Ideal):
    if I.ring != J.ring:
        raise ValueError("ideals live in different rings")


# ---------------------------------------------------------------- division


def divide_with_remainder(f, divisors: Sequence, ordering=None) -> DivisionResult:
    """Determinate division of ``f`` by ``divisors`` for a global ordering."""
    ring = f.ring
    ordering = ordering or ring.ordering
    if not ordering.is_global:
        raise OrderingError("division with remainder needs a global ordering; use localstd.mora_normal_form")
    if any(not g for g in divisors):
        raise ValueError("zero divisor in division with remainder")
    key = module_ordering(ordering).key
    elems = [E.Elem(to_vec(g), key) for g in divisors]
    q, r = E.divide(to_vec(f), elems, key, ring.field)
    return DivisionResult(
        quotients=[ring_poly(qi, ring) for qi in q],
        remainder=from_vec(r, ring, _rank_of(f)),
        unit=ring.one(),
    )


# ---------------------------------------------------------------- Buchberger


def _buchberger_vectors(ring: PolyRing, rank: int | None, vecs: list[dict], ordering) -> GroebnerBasis:
    mord = module_ordering(ordering)
    eng = E.Buchberger(mord.key, ring.field, ring.weights, rank_one=rank is None)
    for v in vecs:
        if v:
            eng.add(dict(v))
    eng.run()
    keep = eng.minimal_indices()
    elements = [from_vec(eng.elems[i].poly, ring, rank) for i in keep]
    return GroebnerBasis(ordering, elements, minimal=True, reduced=False, ring=ring, rank=rank)


def buchberger(I: Ideal | Sequence, ordering=None) -> GroebnerBasis:
    """Minimal Groebner basis of an ideal (or of a list of polynomials)."""
    if not isinstance(I, Ideal):
        gens = list(I)
        if not gens:
            raise ValueError("need at least one generator or an Ideal")
        I = Ideal(gens[0].ring, gens)
    return I.groebner_basis(ordering)


def reduce_gb(G: GroebnerBasis) -> GroebnerBasis:
    """Reduced, monic basis sorted by increasing leading monomial."""
    if G.reduced:
        return G
    ring = G.ring or (G.elements[0].ring if G.elements else None)
    if ring is None:
        return GroebnerBasis(G.ordering, [], True, True, None, G.rank)
    key = G.key
    out = E.interreduce(G.vectors(), key, ring.field, monic=True)
    elements = [from_vec(v, ring, G.rank) for v in out]
    return GroebnerBasis(G.ordering, elements, minimal=True, reduced=True, ring=ring, rank=G.rank)


def check_criterion(G: GroebnerBasis) -> bool:
    """Every minimal generator x^a of M_i gives a zero remainder for x^a g_i."""
    if not G.elements:
        return True
    ring = G.ring or G.elements[0].ring
    key = G.key
    elems = G.engine_elems()
    for i, e in enumerate(elems):
        for alpha, _ in E.minimal_colon_generators([g.lm for g in elems[:i]], e.lm):
            f = {E.mon_mul(m, alpha): c for m, c in e.poly.items()}
            if E.reduce_remainder(f, elems, key, ring.field):
                return False
    return True


def require_groebner(G: GroebnerBasis) -> None:
    if not check_criterion(G):
        raise NotGroebnerError("input fails Buchberger's criterion")


# ---------------------------------------------------------------- queries


def normal_form(f, I: Ideal | GroebnerBasis, ordering=None):
    """Remainder of determinate division by a Groebner basis."""
    G = I if isinstance(I, GroebnerBasis) else I.groebner_basis(ordering)
    if not G.elements:
        return f
    ring = f.ring
    key = G.key
    r = E.reduce_remainder(to_vec(f), G.engine_elems(), key, ring.field)
    return from_vec(r, ring, _rank_of(f))


def leading_ideal(I: Ideal, ordering=None) -> Ideal:
    G = I.groebner_basis(ordering)
    ordering = G.ordering
    return Ideal(I.ring, [g.leading_term(ordering).monic() for g in G.elements])


def monomials_outside(lms: Sequence[tuple], nvars: int) -> list[tuple]:
    """All exponent vectors not divisible by any of ``lms``.

    Raises InfiniteError when some variable has no pure power among ``lms``.
    """
    lms = [tuple(m) for m in lms]
    if any(not any(m) for m in lms):
        return []
    for i in range(nvars):
        if not any(m[i] and not any(m[:i]) and not any(m[i + 1:]) for m in lms):
            raise InfiniteError("infinitely many standard monomials (no pure power of variable %d)" % (i + 1))
    out: list[tuple] = []
    cur = [0] * nvars

    def inside(exps):
        return any(all(map(le, m, exps)) for m in lms)

    def rec(i):
        if i == nvars:
            out.append(tuple(cur))
            return
        while True:
            if inside(cur):
                break
            rec(i + 1)
            cur[i] += 1
        cur[i] = 0

    rec(0)
    return out


def standard_monomials(I: Ideal, ordering=None) -> list[tuple]:
    """Exponent vectors outside Lt(I), ascending in the ordering."""
    G = I.groebner_basis(ordering)
    ordering = G.ordering
    lms = [g.leading_monomial(ordering) for g in G.elements]
    return sorted(monomials_outside(lms, I.ring.ngens), key=ordering.key)


def ideal_membership(f: MultiPoly, I: Ideal, ordering=None) -> bool:
    return not normal_form(I.ring(f), I, ordering)


def is_one(I: Ideal) -> bool:
    if any(g.is_constant() for g in I.generators):
        return True
    return any(g.is_constant() for g in I.groebner_basis().elements)

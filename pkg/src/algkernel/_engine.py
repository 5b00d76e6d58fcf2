"""Term-rewriting core shared by ideals and free modules.

Vectors are dicts ``{mon: coeff}`` with module monomials
``mon = (component, e_1, ..., e_n)``.  Ring monomials used as multipliers
carry component 0, so products and quotients are plain elementwise sums
and differences.
"""
from __future__ import annotations

import heapq
from operator import add, le, sub
from typing import Callable

from .fields import Field


class Elem:
    """A basis element with its cached leading data."""

    __slots__ = ("poly", "lm", "lc", "deg", "ecart")

    def __init__(self, poly: dict, key: Callable, weights: tuple | None = None):
        self.poly = poly
        self.lm = max(poly, key=key)
        self.lc = poly[self.lm]
        self.deg = 0
        self.ecart = 0
        if weights is not None:
            degs = [_wdeg(m, weights) for m in poly]
            self.deg = max(degs)
            self.ecart = self.deg - _wdeg(self.lm, weights)


def _wdeg(mon: tuple, weights: tuple) -> int:
    return sum(map(int.__mul__, weights, mon[1:]))


def divides(a: tuple, b: tuple) -> bool:
    return a[0] == b[0] and all(map(le, a, b))


def mon_lcm(a: tuple, b: tuple) -> tuple:
    return tuple(map(max, a, b))


def mon_quot(b: tuple, a: tuple) -> tuple:
    """``b / a`` as a ring monomial (component 0); assumes ``a | b``."""
    return (0,) + tuple(map(sub, b[1:], a[1:]))


def mon_mul(m: tuple, t: tuple) -> tuple:
    return tuple(map(add, m, t))


def sub_scaled(p: dict, g: dict, c, t: tuple, field: Field) -> None:
    """``p -= c * x^t * g`` in place."""
    fmul, fsub = field.mul, field.sub
    for m, a in g.items():
        k = tuple(map(add, m, t))
        v = p.get(k)
        if v is None:
            p[k] = field.neg(fmul(c, a))
        else:
            v = fsub(v, fmul(c, a))
            if v:
                p[k] = v
            else:
                del p[k]


def add_scaled(p: dict, g: dict, c, t: tuple, field: Field) -> None:
    """``p += c * x^t * g`` in place."""
    fmul, fadd = field.mul, field.add
    for m, a in g.items():
        k = tuple(map(add, m, t))
        v = p.get(k)
        if v is None:
            p[k] = fmul(c, a)
        else:
            v = fadd(v, fmul(c, a))
            if v:
                p[k] = v
            else:
                del p[k]


def scale(p: dict, c, field: Field) -> dict:
    fmul = field.mul
    return {m: fmul(a, c) for m, a in p.items()}


def divide(f: dict, basis: list[Elem], key: Callable, field: Field, full: bool = True):
    """Determinate division of ``f`` by ``basis`` (global orderings).

    Each leading term is divided by the *first* basis element whose leading
    monomial divides it.  Returns ``(quotients, remainder)`` where
    ``quotients[i]`` maps ring monomials to coefficients.  With
    ``full=False`` only the leading term is reduced repeatedly.
    """
    p = dict(f)
    r: dict = {}
    q: list[dict] = [{} for _ in basis]
    fdiv = field.div
    while p:
        m = max(p, key=key)
        c = p[m]
        comp = m[0]
        for i, g in enumerate(basis):
            lm = g.lm
            if lm[0] == comp and all(map(le, lm, m)):
                t = (0,) + tuple(map(sub, m[1:], lm[1:]))
                a = fdiv(c, g.lc)
                q[i][t] = a
                sub_scaled(p, g.poly, a, t, field)
                break
        else:
            if not full:
                r.update(p)
                break
            r[m] = c
            del p[m]
    return q, r


def reduce_remainder(f: dict, basis: list[Elem], key: Callable, field: Field) -> dict:
    """Remainder only; avoids building quotient dicts."""
    p = dict(f)
    r: dict = {}
    fdiv = field.div
    while p:
        m = max(p, key=key)
        c = p[m]
        comp = m[0]
        for g in basis:
            lm = g.lm
            if lm[0] == comp and all(map(le, lm, m)):
                sub_scaled(p, g.poly, fdiv(c, g.lc), (0,) + tuple(map(sub, m[1:], lm[1:])), field)
                break
        else:
            r[m] = c
            del p[m]
    return r


def minimal_colon_generators(lms: list[tuple], lm: tuple) -> list[tuple[tuple, int]]:
    """Minimal generators of ``(lms) : lm`` as ``(ring monomial, source index)``.

    Only monomials in the same component contribute.
    """
    cands = []
    for j, other in enumerate(lms):
        if other[0] != lm[0]:
            continue
        cands.append((mon_quot(mon_lcm(other, lm), lm), j))
    cands.sort(key=lambda t: (sum(t[0]), t[1]))
    out: list[tuple[tuple, int]] = []
    for alpha, j in cands:
        if not any(all(map(le, beta, alpha)) for beta, _ in out):
            out.append((alpha, j))
    return out


class TestSyzygy:
    """Record of one Buchberger test ``x^alpha f_i``: quotients and outcome."""

    __slots__ = ("i", "alpha", "quotients", "new_index")

    def __init__(self, i, alpha, quotients, new_index):
        self.i = i
        self.alpha = alpha
        self.quotients = quotients  # {basis index: {ring monomial: coeff}}
        self.new_index = new_index  # index of the element this test produced, else None


class Buchberger:
    """Buchberger's algorithm driven by the minimal generators of
    ``M_i = (Lt(f_1), ..., Lt(f_{i-1})) : Lt(f_i)``.

    Tests are processed by increasing degree of ``x^alpha Lt(f_i)``, then by
    index.  With ``track=True`` every test's division expression is kept.
    """

    def __init__(self, key: Callable, field: Field, weights: tuple, *, rank_one: bool, track: bool = False):
        self.key = key
        self.field = field
        self.weights = weights
        self.rank_one = rank_one
        self.track = track
        self.elems: list[Elem] = []
        self.pairs: list = []
        self.tests: list[TestSyzygy] = []
        self._counter = 0

    def add(self, poly: dict) -> int:
        e = Elem(poly, self.key)
        i = len(self.elems)
        lms = [g.lm for g in self.elems]
        self.elems.append(e)
        for alpha, j in minimal_colon_generators(lms, e.lm):
            if (
                not self.track
                and self.rank_one
                and alpha[1:] == lms[j][1:]
                and any(alpha[1:])
                and not any(a and b for a, b in zip(alpha[1:], e.lm[1:]))
            ):
                continue  # coprime leading terms: the test reduces to zero
            deg = _wdeg(mon_mul(alpha, e.lm), self.weights)
            self._counter += 1
            heapq.heappush(self.pairs, (deg, i, self._counter, alpha))
        return i

    def run(self, check: Callable | None = None) -> None:
        key, field = self.key, self.field
        while self.pairs:
            if check is not None:
                check()
            _, i, _, alpha = heapq.heappop(self.pairs)
            f = {mon_mul(m, alpha): c for m, c in self.elems[i].poly.items()}
            if self.track:
                q, r = divide(f, self.elems, key, field)
                qd = {j: qj for j, qj in enumerate(q) if qj}
                new = self.add(r) if r else None
                self.tests.append(TestSyzygy(i, alpha, qd, new))
            else:
                r = reduce_remainder(f, self.elems, key, field)
                if r:
                    self.add(r)

    def minimal_indices(self) -> list[int]:
        """Indices whose leading monomials form a minimal generating set."""
        keep = []
        lms = [g.lm for g in self.elems]
        for i, lm in enumerate(lms):
            redundant = False
            for j, other in enumerate(lms):
                if j == i:
                    continue
                if divides(other, lm) and (other != lm or j < i):
                    redundant = True
                    break
            if not redundant:
                keep.append(i)
        return keep


def interreduce(polys: list[dict], key: Callable, field: Field, monic: bool = True) -> list[dict]:
    """Reduced basis: leading terms made minimal, tails reduced, optionally
    monic, sorted by increasing leading monomial."""
    work = [Elem(p, key) for p in polys if p]
    while True:
        hit = None
        for i, e in enumerate(work):
            for j, g in enumerate(work):
                if j != i and g.lm[0] == e.lm[0] and all(map(le, g.lm, e.lm)) and (g.lm != e.lm or j < i):
                    hit = i
                    break
            if hit is not None:
                break
        if hit is None:
            break
        e = work.pop(hit)
        r = reduce_remainder(e.poly, work, key, field)
        if r:
            work.append(Elem(r, key))
    elems = sorted(work, key=lambda e: key(e.lm))
    out = []
    for i, e in enumerate(elems):
        others = elems[:i] + elems[i + 1:]
        tail = dict(e.poly)
        del tail[e.lm]
        r = reduce_remainder(tail, others, key, field) if others else tail
        r[e.lm] = e.lc
        if monic:
            r = scale(r, field.inv(e.lc), field)
        out.append(r)
    return out

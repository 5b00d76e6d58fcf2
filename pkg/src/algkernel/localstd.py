"""Local computations at a point: Mora normal form, standard bases, local
quotient dimensions, intersection multiplicities, Milnor/Tjurina numbers."""
from __future__ import annotations

import heapq
import math
from dataclasses import dataclass, field
from typing import Sequence

from . import _engine as E
from .errors import AlgKernelError, InfiniteError, OrderingError
from .gbasis import DivisionResult, Ideal, module_ordering, monomials_outside
from .orderings import MonomialOrdering, NegWDegRevLex
from .polyring import MultiPoly, PolyRing

__all__ = [
    "LocalQuotientResult",
    "local_ordering",
    "mora_normal_form",
    "standard_basis",
    "local_dim",
    "intersection_multiplicity",
    "curve_multiplicity",
    "milnor_tjurina",
    "INFINITE",
]

INFINITE = math.inf


def local_ordering(ring: PolyRing) -> MonomialOrdering:
    return NegWDegRevLex(ring.ngens, (1,) * ring.ngens)


def _require_local(ordering):
    if not ordering.is_local:
        raise OrderingError("Mora division needs a local ordering (1 > x_i)")


@dataclass
class LocalQuotientResult:
    standard_basis: list
    dimension: int | float
    standard_monomials: list = field(default_factory=list)

    @property
    def infinite(self) -> bool:
        return self.dimension == INFINITE


# ---------------------------------------------------------------- Mora


class _Reducer:
    __slots__ = ("poly", "lm", "lc", "ecart", "index", "unit", "quots")

    def __init__(self, poly, key, weights, index=None, unit=None, quots=None):
        self.poly = poly
        self.lm = max(poly, key=key)
        self.lc = poly[self.lm]
        self.ecart = _ecart(poly, self.lm, weights)
        self.index = index  # basis index for input elements
        self.unit = unit  # representation h = unit*f - sum quots_j g_j for partial remainders
        self.quots = quots


def _ecart(p: dict, lm: tuple, weights) -> int:
    return max(sum(map(int.__mul__, weights, m[1:])) for m in p) - sum(map(int.__mul__, weights, lm[1:]))


class _OverBudget(Exception):
    pass


def _mora(f: dict, basis: list[dict], key, field_, weights, track: bool, budget: list | None = None):
    """Weak normal form: ``u f = sum q_j g_j + h`` with ``Lt(h)`` not divisible by any ``Lt(g_j)``.

    ``budget`` is a one-element list of remaining term operations, shared across calls.
    """
    nv = len(weights)
    one_mon = (0,) * (nv + 1)
    h = dict(f)
    u = {one_mon: field_.one}
    q: list[dict] = [dict() for _ in basis]
    T = [_Reducer(g, key, weights, index=j) for j, g in enumerate(basis) if g]
    while h:
        lm = max(h, key=key)
        best = None
        for t in T:
            if E.divides(t.lm, lm) and (best is None or t.ecart < best.ecart):
                best = t
                if not t.ecart:
                    break
        if best is None:
            break
        eh = _ecart(h, lm, weights)
        if best.ecart > eh:
            T.append(_Reducer(dict(h), key, weights, unit=dict(u) if track else None,
                              quots=[dict(x) for x in q] if track else None))
        if budget is not None:
            budget[0] -= len(best.poly)
            if budget[0] < 0:
                raise _OverBudget
        c = field_.div(h[lm], best.lc)
        beta = E.mon_quot(lm, best.lm)
        E.sub_scaled(h, best.poly, c, beta, field_)
        if track:
            if best.index is not None:
                E.add_scaled(q[best.index], {one_mon: field_.one}, c, beta, field_)
            else:
                E.sub_scaled(u, best.unit, c, beta, field_)
                for j, qs in enumerate(best.quots):
                    if qs:
                        E.sub_scaled(q[j], qs, c, beta, field_)
    return q, h, u


def mora_normal_form(f: MultiPoly, G: Sequence[MultiPoly], ordering: MonomialOrdering | None = None) -> DivisionResult:
    """Mora division: ``unit * f = sum quotients_i G_i + remainder``, unit(0) != 0."""
    ring = f.ring
    ordering = ordering or local_ordering(ring)
    _require_local(ordering)
    key = module_ordering(ordering).key
    basis = [{(0,) + e: c for e, c in g.coeffs.items()} for g in G]
    if any(not b for b in basis):
        raise ValueError("zero divisor in Mora division")
    q, h, u = _mora({(0,) + e: c for e, c in f.coeffs.items()}, basis, key, ring.field,
                    ordering.degree_weights(), track=True)

    def poly(d):
        return MultiPoly(ring, {m[1:]: c for m, c in d.items()})

    return DivisionResult([poly(x) for x in q], poly(h), poly(u))


def _standard_basis_vectors(ring: PolyRing, vecs: list[dict], ordering, budget: list | None = None) -> list[dict]:
    key = module_ordering(ordering).key
    weights = ordering.degree_weights()
    field_ = ring.field
    basis: list[dict] = []
    lms: list[tuple] = []
    lcs: list = []
    pairs: list = []
    counter = 0

    def add(p: dict):
        nonlocal counter
        lm = max(p, key=key)
        i = len(basis)
        for alpha, j in E.minimal_colon_generators(lms, lm):
            counter += 1
            deg = sum(map(int.__mul__, weights, E.mon_mul(alpha, lm)[1:]))
            heapq.heappush(pairs, (deg, i, counter, alpha, j))
        basis.append(p)
        lms.append(lm)
        lcs.append(p[lm])

    for v in vecs:
        if v:
            _, h, _ = _mora(v, basis, key, field_, weights, False, budget) if basis else (None, dict(v), None)
            if h:
                add(h)
    while pairs:
        _, i, _, alpha, j = heapq.heappop(pairs)
        # S-polynomial x^alpha g_i - c x^beta g_j, then weak normal form
        top = E.mon_mul(alpha, lms[i])
        beta = E.mon_quot(top, lms[j])
        s = {E.mon_mul(m, alpha): c for m, c in basis[i].items()}
        E.sub_scaled(s, basis[j], field_.div(lcs[i], lcs[j]), beta, field_)
        if not s:
            continue
        _, h, _ = _mora(s, basis, key, field_, weights, False, budget)
        if h:
            add(h)
    # minimalize on leading monomials
    keep = []
    for i, lm in enumerate(lms):
        if not any(k != i and E.divides(lms[k], lm) and (lms[k] != lm or k < i) for k in range(len(lms))):
            keep.append(i)
    return [basis[i] for i in keep]


def standard_basis(I: Ideal, ordering: MonomialOrdering | None = None,
                   budget: int | None = None) -> list[MultiPoly]:
    ring = I.ring
    ordering = ordering or local_ordering(ring)
    _require_local(ordering)
    vecs = [{(0,) + e: c for e, c in g.coeffs.items()} for g in I.generators]
    out = _standard_basis_vectors(ring, vecs, ordering, None if budget is None else [budget])
    return [MultiPoly(ring, {m[1:]: c for m, c in v.items()}) for v in out]


def _truncated_standard_basis(gens: list[dict], N: int, field_) -> list[dict]:
    """Standard basis of ``(gens) + m^N`` for negdegrevlex, computed in ``k[x]/m^N``.

    Every monomial of degree >= N is zero there, so top reduction terminates and
    no ecart bookkeeping is needed.  Uses the product criterion only.
    """

    def key(m):
        return (-sum(m), tuple(-e for e in reversed(m)))

    basis: list[tuple] = []  # (lm, 1/lc, poly)
    pairs: list = []
    counter = 0
    mul, sub = field_.mul, field_.sub

    def axpy(f: dict, g: dict, c, t: tuple):
        # f -= c * x^t * g, dropping degree >= N
        for m, gc in g.items():
            mm = tuple(map(int.__add__, m, t))
            if sum(mm) >= N:
                continue
            v = sub(f.get(mm, field_.zero), mul(c, gc))
            if v:
                f[mm] = v
            else:
                f.pop(mm, None)

    def reduce(f: dict):
        while f:
            lm = max(f, key=key)
            for glm, ginv, g in basis:
                if all(map(int.__le__, glm, lm)):
                    axpy(f, g, mul(f[lm], ginv), tuple(map(int.__sub__, lm, glm)))
                    break
            else:
                return lm
        return None

    def add(f: dict, lm: tuple):
        nonlocal counter
        i = len(basis)
        for j, (olm, _, _) in enumerate(basis):
            lcm = tuple(map(max, lm, olm))
            if sum(lcm) >= N or not any(map(min, lm, olm)):
                continue
            counter += 1
            heapq.heappush(pairs, (sum(lcm), counter, i, j))
        basis.append((lm, field_.inv(f[lm]), f))

    for g in gens:
        f = {m: c for m, c in g.items() if sum(m) < N}
        lm = reduce(f)
        if lm is not None:
            add(f, lm)
    while pairs:
        _, _, i, j = heapq.heappop(pairs)
        li, ci, gi = basis[i]
        lj, cj, gj = basis[j]
        lcm = tuple(map(max, li, lj))
        s: dict = {}
        axpy(s, gi, field_.neg(ci), tuple(map(int.__sub__, lcm, li)))
        axpy(s, gj, cj, tuple(map(int.__sub__, lcm, lj)))
        lm = reduce(s)
        if lm is not None:
            add(s, lm)
    return [g for _, _, g in basis]


def _truncated_local_dim(ring: PolyRing, gens: list[dict], ordering, max_monomials: int):
    """Certified local dimension via truncation, or None when no tried N certifies.

    If no standard monomial of ``(I + m^N)`` has degree ``N - 1`` then
    ``m^(N-1) ⊂ I + m^N``, hence ``m^(N-1) ⊂ I O`` by Nakayama and the count is exact.
    """
    n = ring.ngens
    low = min((min(sum(m) for m in g) for g in gens if g), default=0)
    N = max(4, 2 * low + 2)
    while math.comb(N + n, n) <= max_monomials:
        basis = _truncated_standard_basis(gens, N, ring.field)
        key = ordering.key
        lms = [max(g, key=key) for g in basis]
        lms += [m for m in _monomials_of_degree(n, N)]
        mons = monomials_outside(lms, n)
        if all(sum(m) < N - 1 for m in mons):
            return basis, mons
        N += max(1, N // 4)
    return None


def _monomials_of_degree(n: int, d: int):
    if n == 1:
        yield (d,)
        return
    for k in range(d, -1, -1):
        for rest in _monomials_of_degree(n - 1, d - k):
            yield (k,) + rest


def _mora_result(ring, ordering, SB) -> LocalQuotientResult:
    lms = [g.leading_monomial(ordering) for g in SB]
    try:
        mons = monomials_outside(lms, ring.ngens)
    except InfiniteError:
        return LocalQuotientResult(SB, INFINITE, [])
    mons.sort(key=ordering.key, reverse=True)
    return LocalQuotientResult(SB, len(mons), mons)


def local_dim(I: Ideal, ordering: MonomialOrdering | None = None, method: str = "auto",
              max_monomials: int = 300_000, mora_budget: int = 50_000) -> LocalQuotientResult:
    """``dim_k O_0 / I O_0`` at the origin (INFINITE if the staircase is unbounded).

    ``method``: "mora", "truncated" (raises when no truncation certifies) or
    "auto": Mora within ``mora_budget`` term operations, then a certified
    truncation, then unbounded Mora.
    """
    ring = I.ring
    ordering = ordering or local_ordering(ring)
    _require_local(ordering)
    if method not in ("auto", "mora", "truncated"):
        raise ValueError("unknown method %r" % method)
    unit_weights = isinstance(ordering, NegWDegRevLex) and all(w == 1 for w in ordering.weights)
    if method == "truncated" and not unit_weights:
        raise OrderingError("truncation needs the unit-weight local degree ordering")
    if method == "auto" and unit_weights:
        try:
            return _mora_result(ring, ordering, standard_basis(I, ordering, budget=mora_budget))
        except _OverBudget:
            pass
    if method != "mora" and unit_weights:
        gens = [dict(g.coeffs) for g in I.generators if g]
        found = _truncated_local_dim(ring, gens, ordering, max_monomials)
        if found is not None:
            basis, mons = found
            mons.sort(key=ordering.key, reverse=True)
            return LocalQuotientResult([MultiPoly(ring, g) for g in basis], len(mons), mons)
        if method == "truncated":
            raise InfiniteError("no truncation up to %d monomials certifies finiteness" % max_monomials)
    return _mora_result(ring, ordering, standard_basis(I, ordering))


# ---------------------------------------------------------------- invariants


def _affine_point(ring: PolyRing, p: Sequence | None) -> list:
    if p is None:
        return [ring.field.zero] * ring.ngens
    if len(p) != ring.ngens:
        raise ValueError("point needs %d coordinates" % ring.ngens)
    try:
        return [ring.field(v) for v in p]
    except (TypeError, ValueError) as exc:
        raise AlgKernelError("point coordinates must lie in the ground field (%s)" % exc) from None


def _at_origin(f: MultiPoly, p) -> MultiPoly:
    pt = _affine_point(f.ring, p)
    if not any(pt):
        return f
    return f.translate(pt)


def intersection_multiplicity(f: MultiPoly, g: MultiPoly, p: Sequence | None = None):
    """``dim_k O_p / (f, g)``; INFINITE when f and g share a component through p."""
    ring = f.ring
    if g.ring != ring:
        raise ValueError("f and g live in different rings")
    if not f or not g:
        return INFINITE
    F, G = _at_origin(f, p), _at_origin(g, p)
    return local_dim(Ideal(ring, [F, G])).dimension


def _uni_gcd(a: list, b: list, field_) -> list:
    """Monic gcd of dense univariate coefficient lists (constant first)."""

    def trim(x):
        x = list(x)
        while x and not x[-1]:
            x.pop()
        return x

    a, b = trim(a), trim(b)
    while b:
        r = list(a)
        inv = field_.inv(b[-1])
        while len(r) >= len(b) and r:
            c = field_.mul(r[-1], inv)
            shift = len(r) - len(b)
            for k, bk in enumerate(b):
                r[shift + k] = field_.sub(r[shift + k], field_.mul(c, bk))
            r = trim(r)
        a, b = b, r
    if not a:
        return []
    inv = field_.inv(a[-1])
    return [field_.mul(c, inv) for c in a]


def _binary_form_squarefree(F: MultiPoly) -> bool:
    """Square-freeness of a binary form via a univariate gcd; axis factors handled explicitly."""
    ring = F.ring
    field_ = ring.field
    ymult = min(e[1] for e in F.coeffs)
    xmult = min(e[0] for e in F.coeffs)
    if ymult >= 2 or xmult >= 2:
        return False
    deg = max(e[0] for e in F.coeffs)
    g = [field_.zero] * (deg + 1)
    for e, c in F.coeffs.items():
        g[e[0]] = field_.add(g[e[0]], c)
    dg = [field_.mul(field_(k), c) for k, c in enumerate(g)][1:]
    return len(_uni_gcd(g, dg, field_)) <= 1


def curve_multiplicity(f: MultiPoly, p: Sequence | None = None) -> tuple[int, MultiPoly, bool]:
    """``(m, tangent cone, ordinary)`` of the affine plane curve ``f`` at ``p``."""
    if not f:
        raise AlgKernelError("the zero polynomial has no multiplicity")
    ring = f.ring
    F = _at_origin(f, p)
    m = min(sum(e) for e in F.coeffs)
    cone = MultiPoly(ring, {e: c for e, c in F.coeffs.items() if sum(e) == m})
    ordinary = False
    # ordinariness only makes sense for plane curves; hypersurfaces report false
    if m >= 2 and ring.ngens == 2:
        ordinary = _binary_form_squarefree(cone)
    return m, cone, ordinary


def milnor_tjurina(f: MultiPoly, p: Sequence | None = None):
    """``(mu, tau)`` at ``p``; INFINITE for non-isolated singularities."""
    if not f:
        raise AlgKernelError("the zero polynomial has no Milnor number")
    ring = f.ring
    F = _at_origin(f, p)
    jac = [F.derivative(i) for i in range(ring.ngens)]
    mu = local_dim(Ideal(ring, jac)).dimension
    tau = local_dim(Ideal(ring, jac + [F])).dimension
    return mu, tau

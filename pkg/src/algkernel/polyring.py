"""Sparse multivariate polynomials, free-module elements and their rings."""
from __future__ import annotations

from math import gcd, lcm
from operator import add
from typing import Iterable, Sequence

from .fields import QQ, Field, FieldElement
from .orderings import (
    DegRevLex,
    ModuleOrdering,
    MonomialOrdering,
    TermOverPosition,
    WDegRevLex,
    make_ordering,
)

__all__ = [
    "PolyRing",
    "MultiPoly",
    "FreeModElem",
    "leading_term",
    "homogenize",
    "dehomogenize",
    "weighted_degree",
    "taylor_part",
]


class PolyRing:
    """``k[x_1, ..., x_n]`` with grading weights and a default ordering."""

    def __init__(
        self,
        field: Field,
        variables: Sequence[str],
        weights: Sequence[int] | None = None,
        ordering: MonomialOrdering | str | None = None,
    ):
        names = tuple(variables)
        if any(not isinstance(v, str) or not v for v in names):
            raise ValueError("variable names must be nonempty strings")
        if len(set(names)) != len(names):
            raise ValueError("variable names must be distinct")
        n = len(names)
        if weights is None:
            weights = (1,) * n
        weights = tuple(int(w) for w in weights)
        if len(weights) != n or any(w < 1 for w in weights):
            raise ValueError("need one positive grading weight per variable")
        self.field = field
        self.variables = names
        self.weights = weights
        if ordering is None:
            if all(w == 1 for w in weights):
                ordering = DegRevLex(n)
            else:
                ordering = WDegRevLex(n, weights)
        elif isinstance(ordering, str):
            ordering = make_ordering(ordering, n, weights)
        if ordering.nvars != n:
            raise ValueError("ordering is for %d variables, ring has %d" % (ordering.nvars, n))
        self.ordering = ordering
        self._index = {v: i for i, v in enumerate(names)}

    @property
    def ngens(self) -> int:
        return len(self.variables)

    @property
    def is_standard_graded(self) -> bool:
        return all(w == 1 for w in self.weights)

    def _ident(self):
        return (self.field, self.variables, self.weights, self.ordering)

    def __eq__(self, other):
        return isinstance(other, PolyRing) and self._ident() == other._ident()

    def __hash__(self):
        return hash(self._ident())

    def __repr__(self):
        return "%r[%s]" % (self.field, ",".join(self.variables))

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise ValueError("%r is not a variable of %r" % (name, self)) from None

    def gens(self) -> list["MultiPoly"]:
        return [self.var(i) for i in range(self.ngens)]

    def var(self, i: int | str) -> "MultiPoly":
        if isinstance(i, str):
            i = self.index(i)
        exps = tuple(1 if j == i else 0 for j in range(self.ngens))
        return MultiPoly(self, {exps: self.field.one})

    def zero(self) -> "MultiPoly":
        return MultiPoly(self, {})

    def one(self) -> "MultiPoly":
        return self.constant(1)

    def constant(self, c) -> "MultiPoly":
        c = self.field(c)
        return MultiPoly(self, {(0,) * self.ngens: c} if c else {})

    def monomial(self, exps: Sequence[int], coeff=1) -> "MultiPoly":
        exps = tuple(int(e) for e in exps)
        if len(exps) != self.ngens or any(e < 0 for e in exps):
            raise ValueError("bad exponent vector %r" % (exps,))
        c = self.field(coeff)
        return MultiPoly(self, {exps: c} if c else {})

    def from_terms(self, terms: Iterable[tuple]) -> "MultiPoly":
        """Build a polynomial from ``(coeff, exps)`` pairs (duplicates are summed)."""
        f = self.field
        d: dict = {}
        for c, e in terms:
            e = tuple(e)
            c = f(c)
            if e in d:
                c = f.add(d[e], c)
            if c:
                d[e] = c
            else:
                d.pop(e, None)
        return MultiPoly(self, d)

    def __call__(self, value) -> "MultiPoly":
        if isinstance(value, MultiPoly):
            if value.ring == self:
                return value
            if value.ring.variables == self.variables and value.ring.field == self.field:
                return MultiPoly(self, dict(value.coeffs))
            raise ValueError("polynomial from a different ring")
        if isinstance(value, str):
            from .sessionio.parser import parse_polynomial

            return parse_polynomial(value, self)
        return self.constant(value)

    def parse(self, text: str) -> "MultiPoly":
        return self(text)

    def with_ordering(self, ordering: MonomialOrdering | str) -> "PolyRing":
        return PolyRing(self.field, self.variables, self.weights, ordering)

    def extend(self, name: str, position: int = 0, weight: int = 1) -> "PolyRing":
        """Ring with one extra variable inserted at ``position``."""
        names = list(self.variables)
        names.insert(position, name)
        weights = list(self.weights)
        weights.insert(position, weight)
        return PolyRing(self.field, names, weights)

    def monomial_degree(self, exps: Sequence[int]) -> int:
        return sum(w * e for w, e in zip(self.weights, exps))


class MultiPoly:
    """Polynomial stored as a dict ``{exponent tuple: nonzero coefficient}``.

    The dict is the canonical form (equality is dict equality); sorted term
    lists are produced on demand for a given ordering.
    """

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: PolyRing, coeffs: dict):
        self.ring = ring
        self.coeffs = coeffs

    # -- basic queries
    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def is_constant(self) -> bool:
        return not self.coeffs or (len(self.coeffs) == 1 and not any(next(iter(self.coeffs))))

    def constant_coefficient(self):
        return self.coeffs.get((0,) * self.ring.ngens, self.ring.field.zero)

    def terms(self, ordering: MonomialOrdering | None = None) -> list[tuple]:
        """``(raw coefficient, exponents)`` pairs, strictly descending."""
        key = (ordering or self.ring.ordering).key
        return [(self.coeffs[e], e) for e in sorted(self.coeffs, key=key, reverse=True)]

    def monomials(self, ordering: MonomialOrdering | None = None) -> list[tuple]:
        key = (ordering or self.ring.ordering).key
        return sorted(self.coeffs, key=key, reverse=True)

    def coefficient(self, exps: Sequence[int]) -> FieldElement:
        return FieldElement(self.ring.field, self.coeffs.get(tuple(exps), self.ring.field.zero))

    def leading_monomial(self, ordering: MonomialOrdering | None = None) -> tuple:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading term")
        return max(self.coeffs, key=(ordering or self.ring.ordering).key)

    def leading_coefficient(self, ordering: MonomialOrdering | None = None):
        return self.coeffs[self.leading_monomial(ordering)]

    def leading_term(self, ordering: MonomialOrdering | None = None) -> "MultiPoly":
        m = self.leading_monomial(ordering)
        return MultiPoly(self.ring, {m: self.coeffs[m]})

    def degree(self) -> int:
        """Weighted degree (maximum over terms)."""
        if not self.coeffs:
            raise ValueError("zero polynomial has no degree")
        w = self.ring.weights
        return max(sum(a * b for a, b in zip(w, e)) for e in self.coeffs)

    def total_degree(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no degree")
        return max(sum(e) for e in self.coeffs)

    def low_degree(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no degree")
        w = self.ring.weights
        return min(sum(a * b for a, b in zip(w, e)) for e in self.coeffs)

    def degree_in(self, i: int) -> int:
        return max((e[i] for e in self.coeffs), default=-1)

    def is_homogeneous(self) -> bool:
        w = self.ring.weights
        return len({sum(a * b for a, b in zip(w, e)) for e in self.coeffs}) <= 1

    def homogeneous_part(self, d: int) -> "MultiPoly":
        w = self.ring.weights
        return MultiPoly(
            self.ring,
            {e: c for e, c in self.coeffs.items() if sum(a * b for a, b in zip(w, e)) == d},
        )

    def support_variables(self) -> set[int]:
        return {i for e in self.coeffs for i, x in enumerate(e) if x}

    # -- arithmetic
    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if other.ring is not self.ring and other.ring != self.ring:
                raise ValueError("ring mismatch: %r vs %r" % (self.ring, other.ring))
            return other
        if isinstance(other, FieldElement):
            if other.field != self.ring.field:
                raise TypeError("mixed-field operands")
            return self.ring.constant(other.value)
        return self.ring.constant(other)

    def __add__(self, other):
        try:
            other = self._coerce(other)
        except (TypeError, ValueError):
            if isinstance(other, MultiPoly):
                raise
            return NotImplemented
        return MultiPoly(self.ring, _add_dicts(self.coeffs, other.coeffs, self.ring.field, False))

    __radd__ = __add__

    def __sub__(self, other):
        try:
            other = self._coerce(other)
        except (TypeError, ValueError):
            if isinstance(other, MultiPoly):
                raise
            return NotImplemented
        return MultiPoly(self.ring, _add_dicts(self.coeffs, other.coeffs, self.ring.field, True))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __neg__(self):
        neg = self.ring.field.neg
        return MultiPoly(self.ring, {e: neg(c) for e, c in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, FreeModElem):
            return NotImplemented
        try:
            other = self._coerce(other)
        except (TypeError, ValueError):
            if isinstance(other, MultiPoly):
                raise
            return NotImplemented
        return MultiPoly(self.ring, _mul_dicts(self.coeffs, other.coeffs, self.ring.field))

    __rmul__ = __mul__

    def __truediv__(self, other):
        """Division by a nonzero constant, or exact division by a polynomial."""
        other = self._coerce(other)
        if other.is_constant():
            c = other.constant_coefficient()
            f = self.ring.field
            inv = f.inv(c)
            return MultiPoly(self.ring, {e: f.mul(a, inv) for e, a in self.coeffs.items()})
        q, r = divmod(self, other)
        if r:
            raise ValueError("polynomial division is not exact")
        return q

    def __divmod__(self, other):
        from .gbasis import divide_with_remainder

        res = divide_with_remainder(self, [self._coerce(other)], _global_ordering(self.ring))
        return res.quotients[0], res.remainder

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = self.ring.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def scale(self, c) -> "MultiPoly":
        f = self.ring.field
        c = f(c)
        if not c:
            return self.ring.zero()
        return MultiPoly(self.ring, {e: f.mul(a, c) for e, a in self.coeffs.items()})

    def monic(self, ordering: MonomialOrdering | None = None) -> "MultiPoly":
        if not self.coeffs:
            return self
        return self.scale(self.ring.field.inv(self.leading_coefficient(ordering)))

    def mul_monomial(self, exps: tuple, c=None) -> "MultiPoly":
        f = self.ring.field
        if c is None:
            return MultiPoly(self.ring, {tuple(map(add, e, exps)): a for e, a in self.coeffs.items()})
        return MultiPoly(
            self.ring, {tuple(map(add, e, exps)): f.mul(a, c) for e, a in self.coeffs.items()}
        )

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.ring.variables == other.ring.variables and self.coeffs == other.coeffs
        if isinstance(other, FreeModElem):
            return NotImplemented
        try:
            return self.coeffs == self.ring.constant(other).coeffs
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    # -- calculus and substitution
    def derivative(self, i: int | str) -> "MultiPoly":
        if isinstance(i, str):
            i = self.ring.index(i)
        f = self.ring.field
        out: dict = {}
        for e, c in self.coeffs.items():
            k = e[i]
            if k:
                c2 = f.mul(c, f(k))
                if c2:
                    e2 = e[:i] + (k - 1,) + e[i + 1:]
                    out[e2] = c2
        return MultiPoly(self.ring, out)

    def evaluate(self, point: Sequence) -> FieldElement:
        """Value at a point with coordinates in the ground field."""
        f = self.ring.field
        pt = [f(v) for v in point]
        if len(pt) != self.ring.ngens:
            raise ValueError("point has wrong number of coordinates")
        total = f.zero
        for e, c in self.coeffs.items():
            t = c
            for v, k in zip(pt, e):
                if k:
                    t = f.mul(t, f.power(v, k))
            total = f.add(total, t)
        return FieldElement(f, total)

    def substitute(self, images: Sequence["MultiPoly"], ring: PolyRing | None = None) -> "MultiPoly":
        """Replace variable ``i`` by ``images[i]`` (all in ``ring``)."""
        ring = ring or self.ring
        if len(images) != self.ring.ngens:
            raise ValueError("need one image per variable")
        images = [ring(g) for g in images]
        powers: list[dict] = [dict() for _ in images]

        def power(i, k):
            p = powers[i].get(k)
            if p is None:
                p = powers[i][k] = images[i] ** k
            return p

        result = ring.zero()
        for e, c in self.coeffs.items():
            t = ring.constant(c)
            for i, k in enumerate(e):
                if k:
                    t = t * power(i, k)
            result = result + t
        return result

    def translate(self, point: Sequence) -> "MultiPoly":
        """``f(x + p)``: moves the point ``p`` to the origin."""
        ring = self.ring
        gens = ring.gens()
        return self.substitute([g + ring.constant(ring.field(v)) for g, v in zip(gens, point)])

    def content_free(self) -> "MultiPoly":
        """Scale so the coefficients are coprime integers with positive leading coefficient."""
        return self.monic() if self.ring.field.characteristic else _primitive(self)

    def __str__(self):
        from .sessionio.render import poly_to_str

        return poly_to_str(self)

    def __repr__(self):
        return "MultiPoly(%s)" % self


def _primitive(p: MultiPoly) -> MultiPoly:
    if not p.coeffs:
        return p
    den = 1
    for c in p.coeffs.values():
        den = lcm(den, int(c.denominator))
    nums = [int(c * den) for c in p.coeffs.values()]
    g = 0
    for x in nums:
        g = gcd(g, x)
    scale = p.ring.field(den) / g
    if p.leading_coefficient() * scale < 0:
        scale = -scale
    return p.scale(scale)


def _global_ordering(ring: PolyRing) -> MonomialOrdering:
    if ring.ordering.is_global:
        return ring.ordering
    return DegRevLex(ring.ngens)


def _add_dicts(a: dict, b: dict, field: Field, subtract: bool) -> dict:
    out = dict(a)
    fadd, fsub = field.add, field.sub
    for e, c in b.items():
        v = out.get(e)
        if v is None:
            out[e] = field.neg(c) if subtract else c
        else:
            v = fsub(v, c) if subtract else fadd(v, c)
            if v:
                out[e] = v
            else:
                del out[e]
    return out


def _mul_dicts(a: dict, b: dict, field: Field) -> dict:
    if len(a) < len(b):
        a, b = b, a
    out: dict = {}
    fmul, fadd = field.mul, field.add
    for eb, cb in b.items():
        for ea, ca in a.items():
            e = tuple(map(add, ea, eb))
            c = fmul(ca, cb)
            v = out.get(e)
            if v is None:
                out[e] = c
            else:
                out[e] = fadd(v, c)
    for e in [e for e, c in out.items() if not c]:
        del out[e]
    return out


class FreeModElem:
    """Element of ``R^rank`` stored as ``{(component, *exponents): coefficient}``.

    Components are 0-based; the ``i``-th component is ``self[i]``.
    """

    __slots__ = ("ring", "rank", "coeffs")

    def __init__(self, ring: PolyRing, rank: int, coeffs: dict):
        if rank < 1:
            raise ValueError("free module rank must be positive")
        self.ring = ring
        self.rank = rank
        self.coeffs = coeffs

    @classmethod
    def from_components(cls, ring: PolyRing, comps: Sequence) -> "FreeModElem":
        d: dict = {}
        for i, p in enumerate(comps):
            p = ring(p)
            for e, c in p.coeffs.items():
                d[(i,) + e] = c
        return cls(ring, len(comps), d)

    @classmethod
    def basis_vector(cls, ring: PolyRing, rank: int, i: int) -> "FreeModElem":
        return cls(ring, rank, {(i,) + (0,) * ring.ngens: ring.field.one})

    def __getitem__(self, i: int) -> MultiPoly:
        if not 0 <= i < self.rank:
            raise IndexError(i)
        return MultiPoly(self.ring, {m[1:]: c for m, c in self.coeffs.items() if m[0] == i})

    def components(self) -> list[MultiPoly]:
        comps: list[dict] = [dict() for _ in range(self.rank)]
        for m, c in self.coeffs.items():
            comps[m[0]][m[1:]] = c
        return [MultiPoly(self.ring, d) for d in comps]

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def _check(self, other: "FreeModElem"):
        if not isinstance(other, FreeModElem) or other.rank != self.rank:
            raise ValueError("free module elements of different rank")
        if other.ring != self.ring:
            raise ValueError("ring mismatch")

    def __add__(self, other):
        self._check(other)
        return FreeModElem(self.ring, self.rank, _add_dicts(self.coeffs, other.coeffs, self.ring.field, False))

    def __sub__(self, other):
        self._check(other)
        return FreeModElem(self.ring, self.rank, _add_dicts(self.coeffs, other.coeffs, self.ring.field, True))

    def __neg__(self):
        neg = self.ring.field.neg
        return FreeModElem(self.ring, self.rank, {m: neg(c) for m, c in self.coeffs.items()})

    def __rmul__(self, other):
        p = self.ring(other) if not isinstance(other, MultiPoly) else other
        field = self.ring.field
        out: dict = {}
        for e, a in p.coeffs.items():
            shift = (0,) + e
            for m, c in self.coeffs.items():
                k = tuple(map(add, m, shift))
                v = out.get(k)
                c2 = field.mul(a, c)
                out[k] = c2 if v is None else field.add(v, c2)
        return FreeModElem(self.ring, self.rank, {k: c for k, c in out.items() if c})

    __mul__ = __rmul__

    def __eq__(self, other):
        if isinstance(other, FreeModElem):
            return self.rank == other.rank and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.rank, frozenset(self.coeffs.items())))

    def leading_term(self, ordering: ModuleOrdering | None = None) -> tuple:
        """``(coefficient, exponents, component)`` of the maximal term."""
        if not self.coeffs:
            raise ValueError("zero vector has no leading term")
        ordering = ordering or TermOverPosition(self.ring.ordering)
        m = max(self.coeffs, key=ordering.key)
        return FieldElement(self.ring.field, self.coeffs[m]), m[1:], m[0]

    def is_homogeneous(self, twists: Sequence[int] | None = None) -> bool:
        twists = twists or (0,) * self.rank
        w = self.ring.weights
        return len({twists[m[0]] + sum(a * b for a, b in zip(w, m[1:])) for m in self.coeffs}) <= 1

    def degree(self, twists: Sequence[int] | None = None) -> int:
        twists = twists or (0,) * self.rank
        w = self.ring.weights
        return max(twists[m[0]] + sum(a * b for a, b in zip(w, m[1:])) for m in self.coeffs)

    def __str__(self):
        return "[" + ", ".join(str(p) for p in self.components()) + "]"

    __repr__ = __str__


# ---------------------------------------------------------------- free functions


def leading_term(f: MultiPoly | FreeModElem, ordering=None):
    """Maximal term of ``f``: ``(coefficient, exponents)`` or, for vectors,
    ``(coefficient, exponents, component)``."""
    if isinstance(f, FreeModElem):
        return f.leading_term(ordering)
    m = f.leading_monomial(ordering)
    return FieldElement(f.ring.field, f.coeffs[m]), m


def weighted_degree(f: MultiPoly) -> int:
    return f.degree()


def taylor_part(f: MultiPoly, m: int) -> MultiPoly:
    """Terms of (weighted) degree exactly ``m``."""
    return f.homogeneous_part(m)


def homogenize(f: MultiPoly, ring: PolyRing, position: int = 0) -> MultiPoly:
    """Homogenize ``f`` into ``ring``, which has one extra degree-1 variable at ``position``."""
    if ring.ngens != f.ring.ngens + 1:
        raise ValueError("target ring must have exactly one more variable")
    if not f.coeffs:
        return ring.zero()
    d = f.degree()
    w = f.ring.weights
    out = {}
    for e, c in f.coeffs.items():
        k = d - sum(a * b for a, b in zip(w, e))
        out[e[:position] + (k,) + e[position:]] = c
    return MultiPoly(ring, out)


def dehomogenize(f: MultiPoly, ring: PolyRing, position: int = 0) -> MultiPoly:
    """Set the variable at ``position`` to 1, landing in ``ring``."""
    if ring.ngens != f.ring.ngens - 1:
        raise ValueError("target ring must have exactly one variable less")
    return ring.from_terms((c, e[:position] + e[position + 1:]) for e, c in f.coeffs.items())


def default_ring(variables: Sequence[str], field: Field = QQ, **kw) -> PolyRing:
    return PolyRing(field, variables, **kw)

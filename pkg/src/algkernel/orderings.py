"""Monomial orderings on polynomial rings and free modules.

Every ordering is realised as a sort key: ``a > b`` iff ``key(a) > key(b)``.
Ring orderings key exponent tuples of length n.  Module orderings key
*module monomials* ``(component, e_1, ..., e_n)``; components are 0-based
and, for the positional orderings, ``e_0 > e_1 > ...``.
"""
from __future__ import annotations

from operator import add
from typing import Sequence

__all__ = [
    "MonomialOrdering",
    "Lex",
    "DegRevLex",
    "WDegRevLex",
    "NegWDegRevLex",
    "BlockOrdering",
    "ModuleOrdering",
    "TermOverPosition",
    "PositionOverTerm",
    "SchreyerOrdering",
    "make_ordering",
    "compare_monomials",
    "ORDERING_NAMES",
]


class MonomialOrdering:
    """Base class of ring orderings; subclasses implement ``_key``."""

    name = "?"

    def __init__(self, nvars: int):
        if nvars < 0:
            raise ValueError("negative number of variables")
        self.nvars = nvars
        self._cache: dict = {}

    # identity
    def _ident(self) -> tuple:
        return (self.name, self.nvars)

    def __eq__(self, other):
        return isinstance(other, MonomialOrdering) and self._ident() == other._ident()

    def __hash__(self):
        return hash(self._ident())

    def __getstate__(self):
        state = dict(self.__dict__)
        state["_cache"] = {}
        return state

    def key(self, exps: tuple):
        try:
            return self._cache[exps]
        except KeyError:
            if len(exps) != self.nvars:
                raise ValueError(
                    "exponent vector of length %d for %d variables" % (len(exps), self.nvars)
                ) from None
            k = self._cache[exps] = self._key(exps)
            return k

    def _key(self, exps: tuple):
        raise NotImplementedError

    def compare(self, a: tuple, b: tuple) -> int:
        ka, kb = self.key(tuple(a)), self.key(tuple(b))
        return (ka > kb) - (ka < kb)

    @property
    def is_global(self) -> bool:
        one = self.key((0,) * self.nvars)
        return all(self.key(_unit(i, self.nvars)) > one for i in range(self.nvars))

    @property
    def is_local(self) -> bool:
        one = self.key((0,) * self.nvars)
        return all(self.key(_unit(i, self.nvars)) < one for i in range(self.nvars))

    def degree_weights(self) -> tuple:
        """Weights used for ecart/sugar bookkeeping."""
        return (1,) * self.nvars

    def __repr__(self):
        return self.name


def _unit(i: int, n: int) -> tuple:
    return tuple(1 if j == i else 0 for j in range(n))


class Lex(MonomialOrdering):
    name = "lex"

    def _key(self, exps):
        return exps


class DegRevLex(MonomialOrdering):
    name = "degrevlex"

    def _key(self, exps):
        return (sum(exps), tuple(-e for e in reversed(exps)))


class WDegRevLex(MonomialOrdering):
    """Weighted degree, ties broken reverse-lexicographically on raw exponents."""

    name = "wdegrevlex"

    def __init__(self, nvars: int, weights: Sequence[int]):
        super().__init__(nvars)
        weights = tuple(int(w) for w in weights)
        if len(weights) != nvars or any(w < 1 for w in weights):
            raise ValueError("wdegrevlex needs %d positive weights" % nvars)
        self.weights = weights

    def _ident(self):
        return (self.name, self.nvars, self.weights)

    def _key(self, exps):
        return (sum(map(int.__mul__, self.weights, exps)), tuple(-e for e in reversed(exps)))

    def degree_weights(self):
        return self.weights

    def __repr__(self):
        return "wdegrevlex(%s)" % ",".join(map(str, self.weights))


class NegWDegRevLex(WDegRevLex):
    """Local ordering: smaller weighted degree is larger, so ``1 > x_i``."""

    name = "neg_wdegrevlex"

    def _key(self, exps):
        return (-sum(map(int.__mul__, self.weights, exps)), tuple(-e for e in reversed(exps)))

    def __repr__(self):
        if all(w == 1 for w in self.weights):
            return "neg_degrevlex"
        return "neg_wdegrevlex(%s)" % ",".join(map(str, self.weights))


class BlockOrdering(MonomialOrdering):
    """Product ordering; each block orders its own (not necessarily contiguous) variables."""

    name = "block"

    def __init__(self, nvars: int, blocks: Sequence[tuple[MonomialOrdering, Sequence[int]]]):
        super().__init__(nvars)
        norm = []
        seen: list[int] = []
        for sub, idx in blocks:
            idx = tuple(int(i) for i in idx)
            if sub.nvars != len(idx):
                raise ValueError("block ordering size does not match its variable range")
            seen.extend(idx)
            norm.append((sub, idx))
        if sorted(seen) != list(range(nvars)):
            raise ValueError("block ranges must partition the variables")
        self.blocks = tuple(norm)

    def _ident(self):
        return (self.name, self.nvars, tuple((s._ident(), idx) for s, idx in self.blocks))

    def _key(self, exps):
        return tuple(sub.key(tuple(exps[i] for i in idx)) for sub, idx in self.blocks)

    def __repr__(self):
        return "block(%s)" % ", ".join("%r%s" % (s, list(idx)) for s, idx in self.blocks)


ORDERING_NAMES = ("lex", "degrevlex", "wdegrevlex", "neg_wdegrevlex", "neg_degrevlex")


def make_ordering(name: str, nvars: int, weights: Sequence[int] | None = None) -> MonomialOrdering:
    """Build a ring ordering from its name."""
    if name == "lex":
        return Lex(nvars)
    if name == "degrevlex":
        return DegRevLex(nvars)
    if name == "wdegrevlex":
        return WDegRevLex(nvars, weights if weights is not None else (1,) * nvars)
    if name in ("neg_wdegrevlex", "neg_degrevlex", "ds"):
        w = weights if weights is not None and name == "neg_wdegrevlex" else (1,) * nvars
        return NegWDegRevLex(nvars, w)
    raise ValueError("unknown monomial ordering %r" % name)


def compare_monomials(ord: MonomialOrdering, a: Sequence[int], b: Sequence[int]) -> int:
    """Return -1, 0 or 1 as ``x^a`` is less than, equal to or greater than ``x^b``."""
    if len(a) != len(b):
        raise ValueError("exponent vectors of different length")
    return ord.compare(tuple(a), tuple(b))


# ---------------------------------------------------------------- modules


class ModuleOrdering:
    """Ordering on module monomials ``(component, *exponents)``."""

    def __init__(self, base: MonomialOrdering):
        self.base = base
        self._cache: dict = {}

    def _ident(self):
        raise NotImplementedError

    def __eq__(self, other):
        return isinstance(other, ModuleOrdering) and self._ident() == other._ident()

    def __hash__(self):
        return hash(self._ident())

    def __getstate__(self):
        state = dict(self.__dict__)
        state["_cache"] = {}
        return state

    def key(self, mon: tuple):
        try:
            return self._cache[mon]
        except KeyError:
            k = self._cache[mon] = self._key(mon)
            return k

    def _key(self, mon):
        raise NotImplementedError

    def compare(self, a: tuple, b: tuple) -> int:
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    @property
    def is_global(self) -> bool:
        return self.base.is_global

    @property
    def is_local(self) -> bool:
        return self.base.is_local

    @property
    def nvars(self) -> int:
        return self.base.nvars


class TermOverPosition(ModuleOrdering):
    def _ident(self):
        return ("top", self.base._ident())

    def _key(self, mon):
        return (self.base.key(mon[1:]), -mon[0])

    def __repr__(self):
        return "term_over_position(%r)" % self.base


class PositionOverTerm(ModuleOrdering):
    def _ident(self):
        return ("pot", self.base._ident())

    def _key(self, mon):
        return (-mon[0], self.base.key(mon[1:]))

    def __repr__(self):
        return "position_over_term(%r)" % self.base


class SchreyerOrdering(ModuleOrdering):
    """Ordering induced on ``R^r`` by the leading monomials of images ``f_1..f_r``.

    ``x^a e_i > x^b e_j`` iff ``x^a Lt(f_i) > x^b Lt(f_j)`` in the parent
    ordering, ties broken by ``i > j``.
    """

    def __init__(self, parent: ModuleOrdering, leading_monomials: Sequence[tuple]):
        super().__init__(parent.base)
        self.parent = parent
        self.leading_monomials = tuple(tuple(m) for m in leading_monomials)
        # x^a e_i  ->  x^a * Lt(f_i): add a shift that also swaps the component
        self._shifts = tuple((m[0] - i,) + m[1:] for i, m in enumerate(self.leading_monomials))

    def _ident(self):
        return ("schreyer", self.parent._ident(), self.leading_monomials)

    def _key(self, mon):
        return (self.parent.key(tuple(map(add, mon, self._shifts[mon[0]]))), mon[0])

    def __repr__(self):
        return "schreyer(%d images)" % len(self.leading_monomials)

"""Groebner bases in free modules, test syzygies, kernels and subquotients.

Column-vector convention: an ``s x r`` matrix maps ``R^r -> R^s`` and its
columns are the images of the basis vectors.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import _engine as E
from .errors import NotGroebnerError, OrderingError
from .gbasis import GroebnerBasis, _buchberger_vectors, module_ordering
from .orderings import ModuleOrdering, SchreyerOrdering, TermOverPosition
from .polyring import FreeModElem, MultiPoly, PolyRing

__all__ = [
    "PolyMatrix",
    "Subquotient",
    "module_buchberger",
    "schreyer_syzygies",
    "buchberger_test_syzygies",
    "syzygies_on_generators",
    "syzygy_matrix",
    "kernel",
    "kernel_generators",
    "subquotient",
    "presentation",
]


class PolyMatrix:
    """Dense matrix of polynomials with optional row/column twists."""

    def __init__(self, ring: PolyRing, entries: Sequence[Sequence], ncols: int | None = None,
                 row_twists: Sequence[int] | None = None, col_twists: Sequence[int] | None = None):
        self.ring = ring
        self.entries = [[ring(e) for e in row] for row in entries]
        if ncols is None:
            ncols = len(self.entries[0]) if self.entries else 0
        if any(len(row) != ncols for row in self.entries):
            raise ValueError("ragged matrix")
        self._ncols = ncols
        self.row_twists = list(row_twists) if row_twists is not None else None
        self.col_twists = list(col_twists) if col_twists is not None else None
        if self.row_twists is not None and len(self.row_twists) != self.nrows:
            raise ValueError("row twist vector has wrong length")
        if self.col_twists is not None and len(self.col_twists) != self.ncols:
            raise ValueError("column twist vector has wrong length")

    @property
    def nrows(self) -> int:
        return len(self.entries)

    @property
    def ncols(self) -> int:
        return self._ncols

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, rc):
        r, c = rc
        return self.entries[r][c]

    @classmethod
    def zero(cls, ring, nrows, ncols) -> "PolyMatrix":
        return cls(ring, [[ring.zero() for _ in range(ncols)] for _ in range(nrows)], ncols)

    @classmethod
    def identity(cls, ring, n) -> "PolyMatrix":
        return cls(ring, [[ring.one() if i == j else ring.zero() for j in range(n)] for i in range(n)], n)

    @classmethod
    def from_columns(cls, ring, nrows: int, cols: Sequence) -> "PolyMatrix":
        """Columns given as FreeModElem, dicts ``{(comp,*exps): c}`` or polynomial lists."""
        entries = [[ring.zero() for _ in cols] for _ in range(nrows)]
        for j, col in enumerate(cols):
            if isinstance(col, FreeModElem):
                col = col.coeffs
            if isinstance(col, dict):
                buckets: list[dict] = [dict() for _ in range(nrows)]
                for m, c in col.items():
                    buckets[m[0]][m[1:]] = c
                for i in range(nrows):
                    entries[i][j] = MultiPoly(ring, buckets[i])
            else:
                for i, p in enumerate(col):
                    entries[i][j] = ring(p)
        return cls(ring, entries, len(cols))

    def column(self, j: int) -> FreeModElem:
        return FreeModElem.from_components(self.ring, [row[j] for row in self.entries])

    def columns(self) -> list[FreeModElem]:
        return [self.column(j) for j in range(self.ncols)]

    def column_vectors(self) -> list[dict]:
        out = []
        for j in range(self.ncols):
            d = {}
            for i, row in enumerate(self.entries):
                for e, c in row[j].coeffs.items():
                    d[(i,) + e] = c
            out.append(d)
        return out

    def row(self, i: int) -> list[MultiPoly]:
        return list(self.entries[i])

    def transpose(self) -> "PolyMatrix":
        return PolyMatrix(self.ring, [list(col) for col in zip(*self.entries)] if self.nrows else
                          [[] for _ in range(self.ncols)], self.nrows, self.col_twists, self.row_twists)

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.ncols != other.nrows:
            raise ValueError("matrix dimensions do not match: %s @ %s" % (self.shape, other.shape))
        ring = self.ring
        out = []
        for i in range(self.nrows):
            row = []
            for j in range(other.ncols):
                s = ring.zero()
                for k in range(self.ncols):
                    a = self.entries[i][k]
                    if a:
                        b = other.entries[k][j]
                        if b:
                            s = s + a * b
                row.append(s)
            out.append(row)
        return PolyMatrix(ring, out, other.ncols)

    def __add__(self, other):
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return PolyMatrix(self.ring, [[a + b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)], self.ncols)

    def __sub__(self, other):
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return PolyMatrix(self.ring, [[a - b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)], self.ncols)

    def __neg__(self):
        return PolyMatrix(self.ring, [[-a for a in r] for r in self.entries], self.ncols)

    def is_zero(self) -> bool:
        return all(not e for row in self.entries for e in row)

    def __eq__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self.shape == other.shape and all(
            a == b for r, s in zip(self.entries, other.entries) for a, b in zip(r, s)
        )

    __hash__ = None

    def hstack(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.nrows != other.nrows:
            raise ValueError("row counts differ")
        return PolyMatrix(self.ring, [r + s for r, s in zip(self.entries, other.entries)], self.ncols + other.ncols)

    def vstack(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.ncols != other.ncols:
            raise ValueError("column counts differ")
        return PolyMatrix(self.ring, self.entries + other.entries, self.ncols)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "PolyMatrix":
        return PolyMatrix(self.ring, [[self.entries[i][j] for j in cols] for i in rows], len(cols))

    def drop_zero_columns(self) -> "PolyMatrix":
        keep = [j for j in range(self.ncols) if any(self.entries[i][j] for i in range(self.nrows))]
        ct = [self.col_twists[j] for j in keep] if self.col_twists is not None else None
        m = self.submatrix(range(self.nrows), keep)
        m.row_twists, m.col_twists = self.row_twists, ct
        return m

    def is_graded(self) -> bool:
        """Every entry is zero or homogeneous of degree col_twist - row_twist."""
        if self.row_twists is None or self.col_twists is None:
            return False
        for i, row in enumerate(self.entries):
            for j, e in enumerate(row):
                if e and (not e.is_homogeneous() or e.degree() != self.col_twists[j] - self.row_twists[i]):
                    return False
        return True

    def __repr__(self):
        return "PolyMatrix(%dx%d)" % self.shape

    def __str__(self):
        return "[" + ", ".join("[" + ", ".join(str(e) for e in row) + "]" for row in self.entries) + "]"


@dataclass
class Subquotient:
    """``(im A + im B) / im B`` inside ``R^s``."""

    generators: PolyMatrix
    relations: PolyMatrix

    @property
    def ambient_rank(self) -> int:
        return self.generators.nrows

    @property
    def ring(self) -> PolyRing:
        return self.generators.ring


# ---------------------------------------------------------------- Groebner bases


def _default_ordering(ring: PolyRing, ordering=None) -> ModuleOrdering:
    if ordering is None:
        ordering = TermOverPosition(ring.ordering)
    elif not isinstance(ordering, ModuleOrdering):
        ordering = TermOverPosition(ordering)
    if not ordering.is_global:
        raise OrderingError("module Groebner bases need a global ordering")
    return ordering


def module_buchberger(gens: Sequence[FreeModElem], ordering=None) -> GroebnerBasis:
    """Minimal Groebner basis of the submodule generated by ``gens``."""
    gens = [g for g in gens if g]
    if not gens:
        raise ValueError("need at least one nonzero generator")
    ring, rank = gens[0].ring, gens[0].rank
    if any(g.rank != rank for g in gens):
        raise ValueError("generators of different rank")
    ordering = _default_ordering(ring, ordering)
    return _buchberger_vectors(ring, rank, [dict(g.coeffs) for g in gens], ordering)


def sort_key_for_resolution(lm: tuple):
    """Sorting rule: component, then degree of the monomial, then degrevlex descending."""
    exps = lm[1:]
    return (lm[0], sum(exps), tuple(reversed(exps)))


def buchberger_test_syzygies(vecs: list[dict], key, field, *, check: bool = True) -> list[tuple[dict, tuple]]:
    """Buchberger's test syzygies on a Groebner basis given as vectors.

    Returns ``(syzygy vector in R^r, leading module monomial)`` pairs sorted by
    the resolution rule.  The leading monomial is ``x^alpha e_i`` by
    construction.
    """
    elems = [E.Elem(v, key) for v in vecs]
    lms = [e.lm for e in elems]
    out = []
    one = field.one
    for i, e in enumerate(elems):
        for alpha, _ in E.minimal_colon_generators(lms[:i], e.lm):
            f = {E.mon_mul(m, alpha): c for m, c in e.poly.items()}
            q, r = E.divide(f, elems, key, field)
            if r and check:
                raise NotGroebnerError("input fails Buchberger's criterion")
            syz: dict = {}
            for j, qj in enumerate(q):
                for t, c in qj.items():
                    syz[(j,) + t[1:]] = field.neg(c)
            lead = (i,) + alpha[1:]
            v = syz.get(lead)
            v = one if v is None else field.add(v, one)
            if v:
                syz[lead] = v
            else:
                syz.pop(lead, None)
            out.append((syz, lead))
    out.sort(key=lambda t: sort_key_for_resolution(t[1]))
    return out


def schreyer_syzygies(G: GroebnerBasis) -> GroebnerBasis:
    """Test syzygies of a Groebner basis, a Groebner basis of the syzygy
    module under the induced ordering."""
    ring = G.ring or G.elements[0].ring
    r = len(G.elements)
    key = G.key
    vecs = G.vectors()
    lms = [E.Elem(v, key).lm for v in vecs]
    induced = SchreyerOrdering(module_ordering(G.ordering), lms)
    syz = buchberger_test_syzygies(vecs, key, ring.field)
    elements = [FreeModElem(ring, r, s) for s, _ in syz]
    return GroebnerBasis(induced, elements, minimal=False, reduced=False, ring=ring, rank=r)


# ---------------------------------------------------------------- syzygies on generators


def _vec_mul_poly(v: dict, q: dict, field) -> dict:
    """Product of a vector and a ring polynomial (both engine dicts)."""
    out: dict = {}
    for t, a in q.items():
        E.add_scaled(out, v, a, t, field)
    return out


def syzygies_on_generators(gens: Sequence, ordering=None) -> PolyMatrix:
    """Matrix ``psi`` whose columns generate the syzygies on ``gens``.

    ``gens`` may be polynomials (rank 1) or free module elements.
    """
    gens = list(gens)
    if not gens:
        raise ValueError("need at least one generator")
    ring = gens[0].ring
    if isinstance(gens[0], MultiPoly):
        vecs = [{(0,) + e: c for e, c in g.coeffs.items()} for g in gens]
    else:
        vecs = [dict(g.coeffs) for g in gens]
    return _syzygies(ring, vecs, _default_ordering(ring, ordering))


def _syzygies(ring: PolyRing, vecs: list[dict], ordering: ModuleOrdering) -> PolyMatrix:
    field = ring.field
    r = len(vecs)
    zero_idx = [i for i, v in enumerate(vecs) if not v]
    live = [i for i, v in enumerate(vecs) if v]
    cols: list[dict] = []  # syzygies over R^r, keyed (i, *exps)
    for i in zero_idx:
        cols.append({(i,) + (0,) * ring.ngens: field.one})
    if live:
        eng = E.Buchberger(ordering.key, field, ring.weights, rank_one=False, track=True)
        for i in live:
            eng.add(dict(vecs[i]))
        eng.run()
        rl = len(live)
        total = len(eng.elems)
        # each test as a vector over R^{r'} in local indices
        producers: dict[int, dict] = {}
        others: list[dict] = []
        for t in eng.tests:
            v: dict = {}
            for j, qj in t.quotients.items():
                for m, c in qj.items():
                    v[(j,) + m[1:]] = field.neg(c)
            lead = (t.i,) + t.alpha[1:]
            c = v.get(lead)
            c = field.one if c is None else field.add(c, field.one)
            if c:
                v[lead] = c
            else:
                v.pop(lead, None)
            if t.new_index is not None:
                # x^a f_i - sum q_j f_j - f_k = 0; negate so that e_k carries +1
                v[(t.new_index,) + (0,) * ring.ngens] = field.neg(field.one)
                producers[t.new_index] = {m: field.neg(c) for m, c in v.items()}
            elif v:
                others.append(v)
        # express each new element through the originals: X_k = -(column part on originals)
        # with C X = D solved by back substitution
        expr: dict[int, dict] = {}
        for k in range(rl, total):
            # producer column (after negation): e_k + sum_{j<k} c_j e_j ; so f_k = -sum c_j f_j
            col = producers[k]
            e: dict = {}
            for m, c in col.items():
                j = m[0]
                if j == k:
                    continue
                t = (0,) + m[1:]
                if j < rl:
                    E.add_scaled(e, {(j,) + (0,) * ring.ngens: field.one}, field.neg(c), t, field)
                else:
                    E.add_scaled(e, expr[j], field.neg(c), t, field)
            expr[k] = e
        for v in others:
            out: dict = {}
            for m, c in v.items():
                j = m[0]
                t = (0,) + m[1:]
                if j < rl:
                    E.add_scaled(out, {(j,) + (0,) * ring.ngens: field.one}, c, t, field)
                else:
                    E.add_scaled(out, expr[j], c, t, field)
            if out:
                cols.append({(live[m[0]],) + m[1:]: c for m, c in out.items()})
    return PolyMatrix.from_columns(ring, r, cols)


def syzygy_matrix(M: PolyMatrix, ordering=None) -> PolyMatrix:
    """Syzygies on the columns of ``M``."""
    ring = M.ring
    if M.nrows == 0:
        return PolyMatrix.identity(ring, M.ncols)
    return _syzygies(ring, M.column_vectors(), _default_ordering(ring, ordering))


# ---------------------------------------------------------------- kernels, subquotients


def kernel(phi0: PolyMatrix, psi: PolyMatrix, phi: PolyMatrix | None = None) -> PolyMatrix:
    """Presentation of ``ker(M -> N)``.

    ``M = coker(phi)`` with ``phi: R^{r1} -> R^{r0}`` (None means ``M`` free),
    ``N = coker(psi)`` with ``psi: R^{s1} -> R^{s0}``, and ``phi0: R^{r0} -> R^{s0}``
    lifts the map on generators.  The kernel is generated by the columns of
    ``A`` below (in ``R^{r0}``, modulo ``im phi``) and the returned ``C``
    presents it: ``coker(C) = ker``.
    """
    ring = phi0.ring
    if psi.nrows != phi0.nrows:
        raise ValueError("phi0 and psi must have the same target rank")
    if phi is not None and phi.nrows != phi0.ncols:
        raise ValueError("phi must map into the source of phi0")
    A = kernel_generators(phi0, psi)
    r0 = phi0.ncols
    if phi is None:
        phi = PolyMatrix.zero(ring, r0, 0)
    CD = syzygy_matrix(A.hstack(phi)) if A.ncols else PolyMatrix.zero(ring, 0, 0)
    return CD.submatrix(range(A.ncols), range(CD.ncols)).drop_zero_columns()


def kernel_generators(phi0: PolyMatrix, psi: PolyMatrix) -> PolyMatrix:
    """Columns of ``A`` in syz(phi0 | psi): generators of the kernel in ``R^{r0}``."""
    AB = syzygy_matrix(phi0.hstack(psi))
    return AB.submatrix(range(phi0.ncols), range(AB.ncols))


def subquotient(A: PolyMatrix, B: PolyMatrix) -> Subquotient:
    if A.nrows != B.nrows:
        raise ValueError("generators and relations need the same ambient rank")
    return Subquotient(A, B)


def presentation(M: Subquotient) -> PolyMatrix:
    """``P`` with ``coker(P)`` isomorphic to ``M``: the A-rows of syz(A|B)."""
    A, B = M.generators, M.relations
    S = syzygy_matrix(A.hstack(B))
    return S.submatrix(range(A.ncols), range(S.ncols)).drop_zero_columns()

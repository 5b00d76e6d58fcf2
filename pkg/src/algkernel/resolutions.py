"""Schreyer resolutions, minimization, Betti tables and Hilbert data."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial
from typing import Sequence

from . import _engine as E
from .errors import AlgKernelError
from .gbasis import Ideal, _buchberger_vectors, monomials_outside
from .modsyz import PolyMatrix, Subquotient, presentation, sort_key_for_resolution, buchberger_test_syzygies
from .orderings import DegRevLex, SchreyerOrdering, TermOverPosition
from .polyring import MultiPoly, PolyRing

__all__ = [
    "GradedFreeResolution",
    "BettiTable",
    "HilbertData",
    "free_resolution",
    "minimize",
    "betti_table",
    "minimal_betti",
    "hilbert_function",
    "hilbert_polynomial",
    "hilbert_data",
    "staircase_hilbert_function",
]


@dataclass
class GradedFreeResolution:
    """``F_0 <- F_1 <- ... <- F_c``; ``maps[i-1]`` is ``phi_i: F_i -> F_{i-1}``.

    ``twists[i]`` lists the degrees ``j`` of the summands ``S(-j)`` of ``F_i``
    (None for ungraded resolutions).
    """

    ring: PolyRing
    ranks: list[int]
    maps: list[PolyMatrix]
    twists: list[list[int]] | None = None

    @property
    def length(self) -> int:
        return len(self.maps)

    def is_complex(self) -> bool:
        return all((self.maps[i] @ self.maps[i + 1]).is_zero() for i in range(len(self.maps) - 1))

    def is_graded(self) -> bool:
        if self.twists is None:
            return False
        return all(m.is_graded() for m in self.maps)

    def is_minimal(self) -> bool:
        return not any(e.is_constant() and e for m in self.maps for row in m.entries for e in row)

    def shape(self) -> list[dict[int, int]]:
        """Per homological degree: ``{j: multiplicity}``."""
        if self.twists is None:
            return [{0: r} for r in self.ranks]
        out = []
        for tw in self.twists:
            d: dict[int, int] = {}
            for j in tw:
                d[j] = d.get(j, 0) + 1
            out.append(dict(sorted(d.items())))
        return out


@dataclass
class BettiTable:
    """``entries[(i, j)] = beta_{ij}``; display row ``j - i``, column ``i``."""

    entries: dict = field(default_factory=dict)

    def __getitem__(self, ij) -> int:
        return self.entries.get(tuple(ij), 0)

    def display_entry(self, i: int, j: int) -> int:
        """``b_{ij} = beta_{i, i+j}``."""
        return self.entries.get((i, i + j), 0)

    def totals(self) -> list[int]:
        if not self.entries:
            return []
        top = max(i for i, _ in self.entries)
        return [sum(v for (i, _), v in self.entries.items() if i == k) for k in range(top + 1)]

    def rows(self) -> list[int]:
        return sorted({j - i for i, j in self.entries})

    def __eq__(self, other):
        if not isinstance(other, BettiTable):
            return NotImplemented
        return {k: v for k, v in self.entries.items() if v} == {k: v for k, v in other.entries.items() if v}


@dataclass
class HilbertData:
    hilbert_polynomial: list[Fraction]  # coefficients, constant term first
    dimension: int  # degree of the polynomial, -1 for the zero polynomial
    degree: int
    arithmetic_genus: int | None

    def __call__(self, t) -> Fraction:
        return sum((c * Fraction(t) ** k for k, c in enumerate(self.hilbert_polynomial)), Fraction(0))


# ---------------------------------------------------------------- construction


def _vec_degree(v: dict, twists: Sequence[int], weights: Sequence[int]) -> set[int]:
    return {twists[m[0]] + sum(map(int.__mul__, weights, m[1:])) for m in v}


def free_resolution(M, graded: bool = True, max_length: int | None = None) -> GradedFreeResolution:
    """Schreyer resolution of ``S/I`` (Ideal), of ``coker(P)`` (PolyMatrix) or of a Subquotient."""
    if isinstance(M, Ideal):
        ring = M.ring
        rank0 = 1
        twists0 = [0]
        vecs = [{(0,) + e: c for e, c in g.coeffs.items()} for g in M.generators]
    else:
        P = presentation(M) if isinstance(M, Subquotient) else M
        ring = P.ring
        rank0 = P.nrows
        twists0 = list(P.row_twists) if P.row_twists is not None else [0] * rank0
        vecs = [v for v in P.column_vectors() if v]
    weights = ring.weights
    if graded:
        for v in vecs:
            if len(_vec_degree(v, twists0, weights)) != 1:
                raise AlgKernelError("graded resolution needs homogeneous input")
    ordering = TermOverPosition(ring.ordering if ring.ordering.is_global else _fallback(ring))
    field_ = ring.field
    ranks = [rank0]
    maps: list[PolyMatrix] = []
    twists: list[list[int]] = [twists0]
    if not vecs:
        return GradedFreeResolution(ring, ranks, maps, twists if graded else None)
    G = _buchberger_vectors(ring, rank0, vecs, ordering)
    key = ordering.key
    cur = [dict(g.coeffs) for g in G.elements]
    cur.sort(key=lambda v: sort_key_for_resolution(max(v, key=key)))
    cur_order = ordering
    limit = max_length if max_length is not None else ring.ngens + 1
    while cur:
        rank = len(cur)
        lms = [max(v, key=cur_order.key) for v in cur]
        tw = [twists[-1][lm[0]] + sum(map(int.__mul__, weights, lm[1:])) for lm in lms]
        mat = PolyMatrix.from_columns(ring, ranks[-1], cur)
        mat.row_twists = list(twists[-1])
        mat.col_twists = tw
        maps.append(mat)
        ranks.append(rank)
        twists.append(tw)
        if len(maps) > limit:
            raise AlgKernelError("resolution exceeded the expected length")
        induced = SchreyerOrdering(cur_order, lms)
        syz = buchberger_test_syzygies(cur, cur_order.key, field_)
        cur = [s for s, _ in syz]
        cur_order = induced
    return GradedFreeResolution(ring, ranks, maps, twists if graded else None)


def _fallback(ring):
    return DegRevLex(ring.ngens)


# ---------------------------------------------------------------- minimization


def _find_unit(m: PolyMatrix):
    for l in range(m.ncols):
        for k in range(m.nrows):
            e = m.entries[k][l]
            if e and e.is_constant():
                return k, l
    return None


def minimize(res: GradedFreeResolution) -> GradedFreeResolution:
    """Cancel unit entries until every differential has entries in the maximal ideal."""
    ring = res.ring
    maps = [[list(row) for row in m.entries] for m in res.maps]
    ncols = [m.ncols for m in res.maps]
    ranks = list(res.ranks)
    twists = [list(t) for t in res.twists] if res.twists is not None else None
    changed = True
    while changed:
        changed = False
        for i, rows in enumerate(maps):
            pm = PolyMatrix(ring, rows, ncols[i]) if rows else None
            hit = _find_unit(pm) if pm is not None else None
            if hit is None:
                continue
            k, l = hit
            u = rows[k][l].constant_coefficient()
            inv = ring.field.inv(u)
            col = [rows[r][l] for r in range(len(rows))]
            prow = rows[k]
            new = []
            for r in range(len(rows)):
                if r == k:
                    continue
                c = col[r]
                if c:
                    cu = c.scale(inv)
                    new.append([rows[r][j] - cu * prow[j] for j in range(ncols[i]) if j != l])
                else:
                    new.append([rows[r][j] for j in range(ncols[i]) if j != l])
            maps[i] = new
            ncols[i] -= 1
            # phi_{i} in list position i-1 maps F_{i-1}: drop its column k
            if i > 0:
                maps[i - 1] = [[e for j, e in enumerate(row) if j != k] for row in maps[i - 1]]
                ncols[i - 1] -= 1
            if i + 1 < len(maps):
                maps[i + 1] = [row for r, row in enumerate(maps[i + 1]) if r != l]
            ranks[i] -= 1
            ranks[i + 1] -= 1
            if twists is not None:
                del twists[i][k]
                del twists[i + 1][l]
            changed = True
            break
    # trailing zero modules
    while maps and ranks[-1] == 0:
        maps.pop()
        ranks.pop()
        if twists is not None:
            twists.pop()
    out_maps = []
    for i, rows in enumerate(maps):
        m = PolyMatrix(ring, rows, ncols[i])
        if twists is not None:
            m.row_twists = list(twists[i])
            m.col_twists = list(twists[i + 1])
        out_maps.append(m)
    return GradedFreeResolution(ring, ranks, out_maps, twists)


# ---------------------------------------------------------------- Betti numbers


def betti_table(res: GradedFreeResolution) -> BettiTable:
    if res.twists is None:
        raise AlgKernelError("Betti tables need a graded resolution")
    entries: dict = {}
    for i, tw in enumerate(res.twists):
        for j in tw:
            entries[(i, j)] = entries.get((i, j), 0) + 1
    return BettiTable(entries)


def _rank(rows: list[list], field) -> int:
    m = [list(r) for r in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        piv = next((r for r in range(rank, len(m)) if m[r][c]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = field.inv(m[rank][c])
        for r in range(len(m)):
            if r != rank and m[r][c]:
                f = field.mul(m[r][c], inv)
                m[r] = [field.sub(a, field.mul(f, b)) for a, b in zip(m[r], m[rank])]
        rank += 1
    return rank


def minimal_betti(M) -> BettiTable:
    """``beta_ij = dim Tor_i(M, k)_j`` from any graded resolution (or input to resolve)."""
    res = M if isinstance(M, GradedFreeResolution) else free_resolution(M)
    if res.twists is None:
        raise AlgKernelError("minimal Betti numbers need a graded resolution")
    field_ = res.ring.field
    tw = res.twists
    degrees = sorted({j for t in tw for j in t})

    def strand_rank(i: int, j: int) -> int:
        # rank of the constant part of phi_i restricted to degree-j summands
        if i < 1 or i > len(res.maps):
            return 0
        m = res.maps[i - 1]
        cols = [c for c, d in enumerate(tw[i]) if d == j]
        rows = [r for r, d in enumerate(tw[i - 1]) if d == j]
        if not cols or not rows:
            return 0
        block = [[m.entries[r][c].constant_coefficient() for c in cols] for r in rows]
        return _rank(block, field_)

    entries = {}
    for i, t in enumerate(tw):
        for j in degrees:
            dim = sum(1 for d in t if d == j)
            if not dim:
                continue
            b = dim - strand_rank(i, j) - strand_rank(i + 1, j)
            if b:
                entries[(i, j)] = b
    return BettiTable(entries)


# ---------------------------------------------------------------- Hilbert


def _as_table(M) -> tuple[BettiTable, int]:
    if isinstance(M, BettiTable):
        raise TypeError("pass a resolution or module so the ring size is known")
    res = M if isinstance(M, GradedFreeResolution) else free_resolution(M)
    if not res.ring.is_standard_graded:
        raise AlgKernelError("Hilbert functions are implemented for the standard grading only")
    return betti_table(res), res.ring.ngens - 1


def _binom(a: int, n: int) -> int:
    return comb(a, n) if a >= 0 else 0


def hilbert_function(M, d: int) -> int:
    """``H_M(d) = sum_i (-1)^i sum_j beta_ij C(d+n-j, n)`` with combinatorial binomials."""
    table, n = _as_table(M)
    return sum((-1) ** i * b * _binom(d + n - j, n) for (i, j), b in table.entries.items())


def _poly_binom(n: int, j: int) -> list[Fraction]:
    """Coefficients of ``prod_{l=1..n} (t + l - j) / n!``."""
    coeffs = [Fraction(1)]
    for l in range(1, n + 1):
        a = l - j
        nxt = [Fraction(0)] * (len(coeffs) + 1)
        for k, c in enumerate(coeffs):
            nxt[k] += c * a
            nxt[k + 1] += c
        coeffs = nxt
    f = factorial(n)
    return [c / f for c in coeffs]


def hilbert_polynomial(M) -> list[Fraction]:
    table, n = _as_table(M)
    total = [Fraction(0)] * (n + 1)
    for (i, j), b in table.entries.items():
        for k, c in enumerate(_poly_binom(n, j)):
            total[k] += (-1) ** i * b * c
    while total and total[-1] == 0:
        total.pop()
    return total


def hilbert_data(M) -> HilbertData:
    P = hilbert_polynomial(M)
    if not P:
        return HilbertData([], -1, 0, None)
    r = len(P) - 1
    d = P[-1] * factorial(r)
    if d.denominator != 1:
        raise AlgKernelError("non-integral degree; the input is probably not graded")
    genus = (-1) ** r * (P[0] - 1)
    return HilbertData(P, r, int(d), int(genus))


def staircase_hilbert_function(I: Ideal, d: int) -> int:
    """``dim (S/I)_d`` by counting standard monomials of degree ``d``."""
    ring = I.ring
    n = ring.ngens
    if not I.generators:
        return comb(d + n - 1, n - 1) if d >= 0 else 0
    G = I.groebner_basis()
    lms = [g.leading_monomial(G.ordering) for g in G.elements]
    count = 0
    for mon in _monomials_of_degree(n, d):
        if not any(all(a <= b for a, b in zip(m, mon)) for m in lms):
            count += 1
    return count


def _monomials_of_degree(n: int, d: int):
    if d < 0:
        return
    if n == 1:
        yield (d,)
        return
    for k in range(d, -1, -1):
        for rest in _monomials_of_degree(n - 1, d - k):
            yield (k,) + rest

"""Intersections, colons, saturation, elimination, dimension, projective closure."""
from __future__ import annotations

from itertools import combinations
from typing import Sequence

from .errors import AlgKernelError
from .gbasis import Ideal, is_one, reduce_gb
from .modsyz import PolyMatrix, syzygy_matrix
from .orderings import BlockOrdering, DegRevLex, WDegRevLex
from .polyring import PolyRing, homogenize

__all__ = [
    "intersect",
    "colon",
    "saturate",
    "eliminate",
    "affine_dim",
    "projective_closure",
    "ideal_equal",
    "reduced_ideal",
]


def _check(I: Ideal, J: Ideal):
    if I.ring != J.ring:
        raise ValueError("ideals live in different rings")


def reduced_ideal(I: Ideal, ordering=None) -> Ideal:
    """Same ideal, generated by its reduced Groebner basis."""
    if not I.generators:
        return I
    return Ideal(I.ring, reduce_gb(I.groebner_basis(ordering)).elements)


def ideal_equal(I: Ideal, J: Ideal) -> bool:
    _check(I, J)
    return I == J


def intersect(I: Ideal, J: Ideal) -> Ideal:
    """``I ∩ J`` from the first row of a syzygy matrix of
    ``[[1, f_1..f_r, 0..0], [1, 0..0, g_1..g_s]]``."""
    _check(I, J)
    ring = I.ring
    if not I.generators or not J.generators:
        return Ideal(ring, [])
    o, z = ring.one(), ring.zero()
    f, g = I.generators, J.generators
    A = PolyMatrix(ring, [
        [o] + list(f) + [z] * len(g),
        [o] + [z] * len(f) + list(g),
    ])
    S = syzygy_matrix(A)
    return reduced_ideal(Ideal(ring, S.row(0)))


def _principal_colon(I: Ideal, g) -> Ideal:
    """``I : (g) = (I ∩ (g)) / g``."""
    ring = I.ring
    K = intersect(I, Ideal(ring, [g]))
    return Ideal(ring, [h / g for h in K.generators])


def colon(I: Ideal, J: Ideal) -> Ideal:
    _check(I, J)
    if not J.generators:
        raise AlgKernelError("colon by the zero ideal")
    out = None
    for g in J.generators:
        Q = _principal_colon(I, g)
        out = Q if out is None else intersect(out, Q)
    return reduced_ideal(out)


def saturate(I: Ideal, J: Ideal) -> tuple[Ideal, int]:
    """``(I : J^∞, m)`` with ``I : J^m = I : J^∞`` and ``m`` minimal."""
    _check(I, J)
    if not J.generators:
        raise AlgKernelError("saturation by the zero ideal")
    cur = reduced_ideal(I)
    maxdeg = max((g.total_degree() for g in I.generators), default=0)
    bound = 1 + maxdeg * max(1, len(I.generators))
    m = 0
    while True:
        nxt = colon(cur, J)
        if nxt == cur:
            return cur, m
        cur, m = nxt, m + 1
        if m > bound:
            raise AlgKernelError("saturation did not stabilize within %d steps" % bound)


def _var_indices(ring: PolyRing, variables: Sequence) -> list[int]:
    out = []
    for v in variables:
        out.append(ring.index(v) if isinstance(v, str) else int(v))
    if any(not 0 <= i < ring.ngens for i in out):
        raise ValueError("variable index out of range")
    return sorted(set(out))


def elimination_ordering(ring: PolyRing, elim: Sequence[int]) -> BlockOrdering:
    rest = [i for i in range(ring.ngens) if i not in elim]
    blocks = [(DegRevLex(len(elim)), tuple(elim))]
    if rest:
        blocks.append((DegRevLex(len(rest)), tuple(rest)))
    return BlockOrdering(ring.ngens, blocks)


def eliminate(I: Ideal, variables: Sequence) -> Ideal:
    """``I ∩ k[remaining variables]`` (as an ideal of the same ring)."""
    ring = I.ring
    elim = _var_indices(ring, variables)
    if not elim:
        return I
    if len(elim) == ring.ngens:
        raise AlgKernelError("cannot eliminate every variable")
    if not I.generators:
        return I
    order = elimination_ordering(ring, elim)
    G = reduce_gb(I.groebner_basis(order))
    keep = [g for g in G.elements if not any(e[i] for e in g.coeffs for i in elim)]
    return Ideal(ring, keep)


def affine_dim(I: Ideal) -> int:
    """Krull dimension of ``V(I)`` via a maximal independent set of ``Lt(I)``."""
    ring = I.ring
    n = ring.ngens
    if not I.generators:
        return n
    if is_one(I):
        return -1
    G = I.groebner_basis()
    supports = [frozenset(i for i, e in enumerate(g.leading_monomial(G.ordering)) if e) for g in G.elements]
    for size in range(n, -1, -1):
        for S in combinations(range(n), size):
            s = frozenset(S)
            if not any(sup <= s for sup in supports):
                return size
    return 0


def _degree_ordering(ring: PolyRing):
    if ring.is_standard_graded:
        return DegRevLex(ring.ngens)
    return WDegRevLex(ring.ngens, ring.weights)


def projective_closure(I: Ideal, name: str | None = None, position: int = 0) -> Ideal:
    """Homogenize a degree-compatible Groebner basis with a new variable."""
    ring = I.ring
    if name is None:
        name = "x0" if "x0" not in ring.variables else "h"
        k = 0
        while name in ring.variables:
            k += 1
            name = "h%d" % k
    target = ring.extend(name, position)
    if not I.generators:
        return Ideal(target, [])
    G = reduce_gb(I.groebner_basis(_degree_ordering(ring)))
    return Ideal(target, [homogenize(g, target, position) for g in G.elements])

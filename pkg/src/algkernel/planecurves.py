"""Projective plane curves: duals, Pluecker numbers, genus, adjoints,
Riemann-Roch spaces and Bezout bookkeeping."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Sequence

from . import _engine as E
from .errors import AlgKernelError, HypothesisError
from .gbasis import Ideal, is_one, reduce_gb
from .idealops import affine_dim, colon, eliminate, intersect, reduced_ideal, saturate
from .localstd import INFINITE, curve_multiplicity, intersection_multiplicity
from .orderings import BlockOrdering, DegRevLex
from .polyring import MultiPoly, PolyRing, dehomogenize

__all__ = [
    "SingularPoint",
    "Divisor",
    "PlueckerData",
    "BezoutReport",
    "RiemannRochSpace",
    "dual_curve",
    "pluecker",
    "plane_genus",
    "point_ideal",
    "ordinary_adjoint_ideal",
    "riemann_roch_space",
    "bezout_certify",
    "graded_part_basis",
]


@dataclass
class SingularPoint:
    point: tuple
    multiplicity: int
    ordinary: bool = True


@dataclass
class Divisor:
    """``sum n_i p_i`` with projective points ``p_i``."""

    terms: list = field(default_factory=list)  # [(point, n)]

    def __post_init__(self):
        merged: dict = {}
        for p, n in self.terms:
            key = _normalize_point(p)
            merged[key] = merged.get(key, 0) + int(n)
        self.terms = [(p, n) for p, n in merged.items() if n]

    @property
    def degree(self) -> int:
        return sum(n for _, n in self.terms)

    def positive(self) -> list:
        return [(p, n) for p, n in self.terms if n > 0]

    def negative(self) -> list:
        return [(p, -n) for p, n in self.terms if n < 0]


def _normalize_point(p) -> tuple:
    pt = [Fraction(str(v)) if not isinstance(v, int) else Fraction(v) for v in p]
    i = next((k for k, v in enumerate(pt) if v), None)
    if i is None:
        raise ValueError("(0:0:0) is not a projective point")
    return tuple(v / pt[i] for v in pt)


def _check_plane(F: MultiPoly):
    if F.ring.ngens != 3:
        raise AlgKernelError("plane curves live in a ring with 3 variables")
    if not F or not F.is_homogeneous():
        raise AlgKernelError("a projective plane curve needs a nonzero homogeneous form")


# ---------------------------------------------------------------- dual curve


def dual_curve(F: MultiPoly, names: Sequence[str] = ("u", "v", "w")) -> MultiPoly:
    """Equation of the dual curve in the dual coordinates ``names``.

    Tangent lines are cut out by ``F`` and the 2x2 minors of
    ``[[u, v, w], [F_x, F_y, F_z]]``; points where a chosen nonvanishing
    partial derivative vanishes are removed with an auxiliary variable
    ``t`` (``1 - t*F_i``), then ``t`` and the point coordinates are eliminated.
    """
    _check_plane(F)
    d = F.total_degree()
    if d < 2:
        raise AlgKernelError("the dual of a line is a point; need degree >= 2")
    ring = F.ring
    names = list(names)
    taken = set(ring.variables)
    while taken & set(names):
        names = [n + "_" for n in names]
    tname = "t"
    while tname in taken or tname in names:
        tname += "_"
    big = PolyRing(ring.field, [tname] + list(ring.variables) + names)

    def lift(p: MultiPoly) -> MultiPoly:
        return MultiPoly(big, {(0,) + e + (0, 0, 0): c for e, c in p.coeffs.items()})

    t = big.var(0)
    u, v, w = big.var(4), big.var(5), big.var(6)
    grads = [lift(F.derivative(i)) for i in range(3)]
    gi = next(g for g in grads if g)
    gens = [lift(F), u * grads[1] - v * grads[0], u * grads[2] - w * grads[0], v * grads[2] - w * grads[1],
            big.one() - t * gi]
    order = BlockOrdering(7, [(DegRevLex(4), (0, 1, 2, 3)), (DegRevLex(3), (4, 5, 6))])
    G = reduce_gb(Ideal(big, gens).groebner_basis(order))
    keep = [g for g in G.elements if not any(any(e[:4]) for e in g.coeffs)]
    if not keep:
        raise AlgKernelError("elimination produced no equation; is F reduced and irreducible?")
    keep.sort(key=lambda g: (g.total_degree(), len(g.coeffs)))
    dual_ring = PolyRing(ring.field, names)
    out = MultiPoly(dual_ring, {e[4:]: c for e, c in keep[0].coeffs.items()})
    return out.content_free()


# ---------------------------------------------------------------- numerics


@dataclass
class PlueckerData:
    g: int
    d_check: int
    flexes: int
    bitangents: int
    consistent: bool
    hypotheses_ok: bool
    warnings: list = field(default_factory=list)


def pluecker(d: int, delta: int, kappa: int) -> PlueckerData:
    """Pluecker numbers of a degree-``d`` curve with ``delta`` nodes and ``kappa`` cusps."""
    if d < 2 or delta < 0 or kappa < 0:
        raise HypothesisError("need d >= 2 and nonnegative node/cusp counts")
    twice_g = (d - 1) * (d - 2) - 2 * delta - 2 * kappa
    g = twice_g // 2
    dc = d * (d - 1) - 2 * delta - 3 * kappa
    f = 3 * d * (d - 2) - 6 * delta - 8 * kappa
    b2 = d * (d - 2) * (d - 3) * (d + 3) - 2 * (4 * d * d - 4 * d - 20) * delta \
        - 2 * (6 * d * d - 6 * d - 27) * kappa + 2 * (2 * delta + 3 * kappa) ** 2
    b = b2 // 2
    warnings = []
    ok = min(g, dc, f, b) >= 0 and twice_g % 2 == 0 and b2 % 2 == 0
    if not ok:
        warnings.append("hypotheses violated: negative or non-integral invariant")
    consistent = (
        2 * g == (dc - 1) * (dc - 2) - 2 * b - 2 * f
        and d == dc * (dc - 1) - 2 * b - 3 * f
        and kappa == 3 * dc * (dc - 2) - 6 * b - 8 * f
    )
    if not consistent:
        warnings.append("dual-side identities do not hold")
    return PlueckerData(g, dc, f, b, consistent, ok, warnings)


def plane_genus(d: int, deltas: Sequence[int]) -> tuple[int, list[str]]:
    """``(d-1)(d-2)/2 - sum(deltas)`` and warnings (negative genus is returned as is)."""
    if d < 1 or any(x < 0 for x in deltas):
        raise HypothesisError("need d >= 1 and nonnegative delta invariants")
    g = (d - 1) * (d - 2) // 2 - sum(deltas)
    return g, (["negative genus: the delta invariants are inconsistent with the degree"] if g < 0 else [])


# ---------------------------------------------------------------- points and charts


def _field_point(ring: PolyRing, p) -> list:
    try:
        pt = [ring.field(v) for v in p]
    except (TypeError, ValueError) as exc:
        raise AlgKernelError("point coordinates must lie in the ground field (%s)" % exc) from None
    if len(pt) != ring.ngens:
        raise ValueError("point needs %d coordinates" % ring.ngens)
    if not any(pt):
        raise ValueError("(0:...:0) is not a projective point")
    return pt


def point_ideal(ring: PolyRing, p) -> Ideal:
    """Ideal of the projective point ``p``: linear forms ``p_i x_j - p_j x_i``."""
    pt = _field_point(ring, p)
    i = next(k for k, v in enumerate(pt) if v)
    xs = ring.gens()
    return Ideal(ring, [xs[j].scale(pt[i]) - xs[i].scale(pt[j]) for j in range(ring.ngens) if j != i])


def affine_chart(F: MultiPoly, p) -> tuple[MultiPoly, list]:
    """Dehomogenize at a nonzero coordinate of ``p``; returns the affine curve and point."""
    ring = F.ring
    pt = _field_point(ring, p)
    i = next(k for k, v in enumerate(pt) if v)
    fld = ring.field
    inv = fld.inv(pt[i])
    sub = PolyRing(fld, [v for k, v in enumerate(ring.variables) if k != i])
    f = dehomogenize(F, sub, i)
    apt = [fld.mul(v, inv) for k, v in enumerate(pt) if k != i]
    return f, apt


def _on_curve(F: MultiPoly, p) -> bool:
    return not F.evaluate(_field_point(F.ring, p)).value


# ---------------------------------------------------------------- adjoints


def ordinary_adjoint_ideal(F: MultiPoly, sing: Sequence[SingularPoint], check: bool = True) -> Ideal:
    """``∩ (I(p)^(r-1) + (F))`` over the declared ordinary singular points."""
    _check_plane(F)
    ring = F.ring
    if not sing:
        return Ideal(ring, [ring.one()])
    out = None
    for s in sing:
        if check:
            _verify_singular_point(F, s)
        P = point_ideal(ring, s.point) ** (s.multiplicity - 1)
        piece = reduced_ideal(P + Ideal(ring, [F]))
        out = piece if out is None else intersect(out, piece)
    return out


def _verify_singular_point(F: MultiPoly, s: SingularPoint):
    if not _on_curve(F, s.point):
        raise HypothesisError("declared point %s is not on the curve" % (tuple(s.point),))
    f, apt = affine_chart(F, s.point)
    m, _, ordinary = curve_multiplicity(f, apt)
    if m != s.multiplicity:
        raise HypothesisError("point %s has multiplicity %d, not %d" % (tuple(s.point), m, s.multiplicity))
    if m >= 2 and not ordinary:
        raise HypothesisError("point %s is not an ordinary singularity (tangent cone not square-free)" % (tuple(s.point),))


# ---------------------------------------------------------------- graded parts


def _graded_spanning_set(I: Ideal, e: int) -> list[MultiPoly]:
    ring = I.ring
    G = reduce_gb(I.groebner_basis())
    out = []
    for g in G.elements:
        k = e - g.total_degree()
        if k < 0:
            continue
        for mon in _monomials(ring.ngens, k):
            out.append(g.mul_monomial(mon))
    return out


def _monomials(n: int, d: int):
    if n == 1:
        yield (d,)
        return
    for k in range(d, -1, -1):
        for rest in _monomials(n - 1, d - k):
            yield (k,) + rest


def _echelon(polys: Sequence[MultiPoly], ordering) -> list[MultiPoly]:
    """Reduced row echelon basis of the span, rows by decreasing pivot monomial."""
    if not polys:
        return []
    ring = polys[0].ring
    key = ordering.key
    rows: list[dict] = []  # pivot -> row, kept reduced
    pivots: dict = {}
    fld = ring.field
    for p in polys:
        v = dict(p.coeffs)
        for piv, row in list(pivots.items()):
            c = v.get(piv)
            if c:
                E.sub_scaled(v, row, c, (0,) * ring.ngens, fld)
        if not v:
            continue
        piv = max(v, key=key)
        inv = fld.inv(v[piv])
        v = {m: fld.mul(c, inv) for m, c in v.items()}
        for q, row in pivots.items():
            c = row.get(piv)
            if c:
                E.sub_scaled(row, v, c, (0,) * ring.ngens, fld)
        pivots[piv] = v
    order = sorted(pivots, key=key, reverse=True)
    del rows
    return [MultiPoly(ring, pivots[p]) for p in order]


def graded_part_basis(I: Ideal, e: int, modulo: MultiPoly | None = None) -> list[MultiPoly]:
    """Echelon basis of ``I_e`` (or of ``I_e / (modulo)_e`` via normal forms mod ``modulo``)."""
    ring = I.ring
    span = _graded_spanning_set(I, e)
    if modulo is not None:
        key = ring.ordering
        fld = ring.field
        el = [E.Elem({(0,) + m: c for m, c in modulo.coeffs.items()},
                     lambda m: key.key(m[1:]))]
        red = []
        for p in span:
            r = E.reduce_remainder({(0,) + m: c for m, c in p.coeffs.items()}, el, lambda m: key.key(m[1:]), fld)
            red.append(MultiPoly(ring, {m[1:]: c for m, c in r.items()}))
        span = red
    return _echelon(span, ring.ordering)


def _graded_dim(I: Ideal, e: int) -> int:
    if e < 0:
        return 0
    ring = I.ring
    n = ring.ngens
    if not I.generators:
        return 0
    G = I.groebner_basis()
    lms = [g.leading_monomial(G.ordering) for g in G.elements]
    outside = sum(1 for m in _monomials(n, e) if not any(all(a <= b for a, b in zip(l, m)) for l in lms))
    return comb(e + n - 1, n - 1) - outside


# ---------------------------------------------------------------- Riemann-Roch


@dataclass
class RiemannRochSpace:
    ell: int
    basis: list  # (numerator, denominator) forms
    e: int
    denominator: MultiPoly | None


def _divisor_ideal(F: MultiPoly, pts: list) -> Ideal:
    ring = F.ring
    out = None
    for p, n in pts:
        piece = reduced_ideal(point_ideal(ring, p) ** n + Ideal(ring, [F]))
        out = piece if out is None else intersect(out, piece)
    return out if out is not None else Ideal(ring, [ring.one()])


def riemann_roch_space(F: MultiPoly, D: Divisor, sing: Sequence[SingularPoint] = (),
                       e: int | None = None) -> RiemannRochSpace:
    """``l(D)`` and a basis ``h_i / h`` of ``L(D)`` for a curve with ordinary singularities."""
    _check_plane(F)
    ring = F.ring
    if not ring.ordering.is_global:
        raise AlgKernelError("the ring ordering must be global")
    d = F.total_degree()
    for s in sing:
        _verify_singular_point(F, s)
    sing_pts = {_normalize_point(s.point) for s in sing}
    for p, _ in D.terms:
        if p in sing_pts:
            raise HypothesisError("divisor support meets the singular locus at %s" % (p,))
        if not _on_curve(F, p):
            raise HypothesisError("divisor point %s is not on the curve" % (p,))
    ID1 = _divisor_ideal(F, D.positive())
    ID2 = _divisor_ideal(F, D.negative())
    Jadj = ordinary_adjoint_ideal(F, sing, check=False)
    I = reduced_ideal(intersect(ID1, Jadj))
    Fi = Ideal(ring, [F])

    def fdim(k):
        return comb(k - d + 2, 2) if k >= d else 0

    start = 1
    if e is not None:
        if _graded_dim(I, e) <= fdim(e):
            raise HypothesisError("I_e equals (F)_e for e=%d; choose a larger e" % e)
        start = e
    k = start
    while _graded_dim(I, k) <= fdim(k):
        k += 1
    e = k
    h = graded_part_basis(I, e, modulo=F)[0]
    Iprime = _colon_or_unit(Ideal(ring, [F, h]), I)
    m = Ideal(ring, ring.gens())
    S = Iprime + ID2
    empty = is_one(saturate(S, m)[0])
    if empty:
        J = reduced_ideal(intersect(Iprime, ID2))
    else:
        J, _ = saturate(Iprime * ID2 + Fi, m)
    basis = graded_part_basis(J, e, modulo=F)
    return RiemannRochSpace(len(basis), [(b, h) for b in basis], e, h)


def _colon_or_unit(A: Ideal, B: Ideal) -> Ideal:
    if is_one(B):
        return reduced_ideal(A)
    return colon(A, B)


# ---------------------------------------------------------------- Bezout


@dataclass
class BezoutReport:
    points: list  # (point, multiplicity, claimed)
    residual: int
    total: int
    expected: int
    certified: bool
    warnings: list = field(default_factory=list)


def bezout_certify(F: MultiPoly, G: MultiPoly, points: Sequence, residual: int = 0) -> BezoutReport:
    """Sum local intersection multiplicities at ``points`` (plus ``residual``) against ``deg F * deg G``.

    ``points`` holds projective points or ``(point, claimed multiplicity)`` pairs.
    """
    _check_plane(F)
    _check_plane(G)
    ring = F.ring
    if affine_dim(Ideal(ring, [F, G])) > 1:
        raise AlgKernelError("the curves share a common component")
    rows = []
    warnings = []
    total = residual
    seen = set()
    for item in points:
        if isinstance(item, tuple) and len(item) == 2 and isinstance(item[0], (tuple, list)):
            p, claim = item
        else:
            p, claim = item, None
        key = _normalize_point(p)
        if key in seen:
            raise ValueError("point %s listed twice" % (key,))
        seen.add(key)
        f, apt = affine_chart(F, p)
        g, _ = affine_chart(G, p)
        i = intersection_multiplicity(f, g, apt)
        if i == INFINITE:
            raise AlgKernelError("infinite intersection multiplicity at %s" % (key,))
        if claim is not None and claim != i:
            warnings.append("claimed multiplicity %s at %s, computed %d" % (claim, key, i))
        rows.append((p, i, claim))
        total += i
    expected = F.total_degree() * G.total_degree()
    return BezoutReport(rows, residual, total, expected, total == expected and not warnings, warnings)

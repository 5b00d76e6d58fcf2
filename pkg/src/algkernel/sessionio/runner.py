"""Execute parsed sessions into result documents."""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterator

from .. import idealops, localstd, modsyz, planecurves, resolutions
from ..errors import AlgKernelError, SessionError
from ..fields import parse_field
from ..gbasis import Ideal, normal_form, reduce_gb
from ..modsyz import PolyMatrix
from ..orderings import make_ordering
from ..polyring import MultiPoly, PolyRing
from . import syntax as A
from .evaluate import eval_divisor, eval_int, eval_point, eval_poly
from .parser import ORDERINGS, parse_session
from .render import poly_to_str
from .results import (
    Result,
    ResultDocument,
    betti_value,
    hilbert_value,
    integer_value,
    matrix_value,
    point_str,
    polys_value,
    ring_spec,
)

RING_KEY = "__ring__"


def _err(msg: str, node) -> SessionError:
    return SessionError(msg, node.pos.line, node.pos.column)


class Context:
    """Names visible to one command: a snapshot of the declarations before it."""

    def __init__(self, env: dict, default_ordering: str | None = None):
        self.env = env
        self.default_ordering = default_ordering

    @property
    def ring(self) -> PolyRing:
        ring = self.env.get(RING_KEY)
        if ring is None:
            raise AlgKernelError("no ring declared")
        return ring

    def ordering(self, ring: PolyRing, node=None):
        if node is None:
            if self.default_ordering:
                return make_ordering(self.default_ordering, ring.ngens, ring.weights)
            return ring.ordering
        if not isinstance(node, A.Name) or node.ident not in ORDERINGS:
            raise _err("expected an ordering name", node)
        return make_ordering(node.ident, ring.ngens, ring.weights)

    def poly(self, node) -> MultiPoly:
        return eval_poly(node, self.ring, self.env)

    def ideal(self, node) -> Ideal:
        if isinstance(node, A.Name):
            v = self.env.get(node.ident)
            if isinstance(v, Ideal):
                return v
        if isinstance(node, A.ListExpr):
            return Ideal(self.ring, [self.poly(e) for e in node.items])
        return Ideal(self.ring, [self.poly(node)])

    def matrix(self, node) -> PolyMatrix:
        if isinstance(node, A.Name):
            v = self.env.get(node.ident)
            if isinstance(v, PolyMatrix):
                return v
            if isinstance(v, Ideal):
                return PolyMatrix(v.ring, [list(v.generators)])
        if isinstance(node, A.ListExpr) and node.items and all(isinstance(r, A.ListExpr) for r in node.items):
            return PolyMatrix(self.ring, [[self.poly(e) for e in r.items] for r in node.items])
        raise _err("expected a matrix", node)

    def module(self, node):
        """Ideal or matrix argument of syz/resolve/betti/hilbert."""
        if isinstance(node, A.Name) and isinstance(self.env.get(node.ident), PolyMatrix):
            return self.env[node.ident]
        if isinstance(node, A.ListExpr) and node.items and all(isinstance(r, A.ListExpr) for r in node.items):
            return self.matrix(node)
        return self.ideal(node)


def _options(cmd: A.Command, allowed: dict) -> dict:
    out = {}
    for opt in cmd.options:
        if opt.key not in allowed:
            raise SessionError("unknown option %r for %s" % (opt.key, cmd.op), opt.pos.line, opt.pos.column,
                               sorted(allowed))
        kind = allowed[opt.key]
        v = opt.value
        if kind == "bool":
            if not (isinstance(v, A.Name) and v.ident in ("true", "false")):
                raise _err("expected true or false", v)
            out[opt.key] = v.ident == "true"
        elif kind == "int":
            out[opt.key] = eval_int(v)
        elif kind == "name":
            if not isinstance(v, A.Name):
                raise _err("expected a name", v)
            out[opt.key] = v.ident
    return out


def _var_names(ctx: Context, nodes) -> list[str]:
    names = []
    for n in nodes:
        items = n.items if isinstance(n, A.ListExpr) else [n]
        for it in items:
            if not isinstance(it, A.Name) or it.ident not in ctx.ring.variables:
                raise _err("expected a ring variable", it)
            names.append(it.ident)
    return names


def _singular_points(args) -> list:
    pts = []
    for a in args:
        for p, r in eval_divisor(a, {}):
            if r < 2:
                raise _err("singular points need multiplicity at least 2, as r*(a:b:c)", a)
            pts.append(planecurves.SingularPoint(p, r))
    return pts


# -- command handlers: (ctx, cmd) -> (kind, value, warnings)


def _gb(ctx, cmd):
    opts = _options(cmd, {"reduced": "bool"})
    I = ctx.ideal(cmd.args[0])
    order = ctx.ordering(I.ring, cmd.args[1] if len(cmd.args) > 1 else None)
    reduced = opts.get("reduced", True)
    G = I.groebner_basis(order, reduced=reduced) if I.generators else None
    elems = G.elements if G else []
    return "gb", polys_value(I.ring, elems, order, ordering=order.name, reduced=reduced), []


def _nf(ctx, cmd):
    f = ctx.poly(cmd.args[0])
    I = ctx.ideal(cmd.args[1])
    order = ctx.ordering(I.ring, cmd.args[2] if len(cmd.args) > 2 else None)
    r = normal_form(f, I, order) if I.generators else f
    return "polynomial", {"ring": ring_spec(f.ring), "polynomial": poly_to_str(r)}, []


def _eliminate(ctx, cmd):
    I = ctx.ideal(cmd.args[0])
    J = idealops.eliminate(I, _var_names(ctx, cmd.args[1:]))
    return "ideal", polys_value(I.ring, J.generators), []


def _dim(ctx, cmd):
    return "integer", idealops.affine_dim(ctx.ideal(cmd.args[0])), []


def _intersect(ctx, cmd):
    I = ctx.ideal(cmd.args[0])
    for a in cmd.args[1:]:
        I = idealops.intersect(I, ctx.ideal(a))
    return "ideal", polys_value(I.ring, I.generators), []


def _quotient(ctx, cmd):
    Q = idealops.colon(ctx.ideal(cmd.args[0]), ctx.ideal(cmd.args[1]))
    return "ideal", polys_value(Q.ring, Q.generators), []


def _saturate(ctx, cmd):
    S, m = idealops.saturate(ctx.ideal(cmd.args[0]), ctx.ideal(cmd.args[1]))
    return "saturation", polys_value(S.ring, S.generators, exponent=m), []


def _closure(ctx, cmd):
    opts = _options(cmd, {"name": "name", "position": "int"})
    C = idealops.projective_closure(ctx.ideal(cmd.args[0]), opts.get("name"), opts.get("position", 0))
    return "ideal", polys_value(C.ring, reduce_gb(C.groebner_basis()).elements if C.generators else []), []


def _syz(ctx, cmd):
    M = ctx.module(cmd.args[0])
    if isinstance(M, Ideal):
        M = PolyMatrix(M.ring, [list(M.generators)])
    return "matrix", matrix_value(modsyz.syzygy_matrix(M)), []


def _kernel(ctx, cmd):
    mats = [ctx.matrix(a) for a in cmd.args]
    return "matrix", matrix_value(modsyz.kernel(*mats)), []


def _resolution(ctx, cmd, minimal_default=True):
    opts = _options(cmd, {"minimal": "bool"})
    M = ctx.module(cmd.args[0])
    return M, opts.get("minimal", minimal_default)


def _resolve(ctx, cmd):
    M, minimal = _resolution(ctx, cmd)
    res = resolutions.free_resolution(M)
    if minimal:
        res = resolutions.minimize(res)
    value = {
        "ring": ring_spec(res.ring),
        "ranks": list(res.ranks),
        "twists": [list(t) for t in res.twists] if res.twists else None,
        "betti": betti_value(resolutions.betti_table(res))["entries"] if res.twists else [],
        "maps": [matrix_value(m)["rows"] for m in res.maps],
    }
    if value["twists"] is None:
        value["twists"] = [[0] * r for r in res.ranks]
    return "resolution", value, []


def _betti(ctx, cmd):
    M, minimal = _resolution(ctx, cmd)
    if minimal:
        B = resolutions.minimal_betti(M)
    else:
        B = resolutions.betti_table(resolutions.free_resolution(M))
    return "betti", betti_value(B), []


def _hilbert(ctx, cmd):
    opts = _options(cmd, {"d": "int"})
    M = ctx.module(cmd.args[0])
    if "d" in opts:
        return "integer", resolutions.hilbert_function(M, opts["d"]), []
    return "hilbert", hilbert_value(resolutions.hilbert_data(M)), []


def _point_arg(cmd, i):
    return eval_point(cmd.args[i]) if len(cmd.args) > i else None


def _imult(ctx, cmd):
    i = localstd.intersection_multiplicity(ctx.poly(cmd.args[0]), ctx.poly(cmd.args[1]), _point_arg(cmd, 2))
    return "integer", integer_value(i), []


def _mult(ctx, cmd):
    m, cone, ordinary = localstd.curve_multiplicity(ctx.poly(cmd.args[0]), _point_arg(cmd, 1))
    return "report", {"multiplicity": m, "tangent_cone": poly_to_str(cone), "ordinary": ordinary}, []


def _milnor(ctx, cmd):
    mu, tau = localstd.milnor_tjurina(ctx.poly(cmd.args[0]), _point_arg(cmd, 1))
    return "report", {"mu": integer_value(mu), "tau": integer_value(tau)}, []


def _dual(ctx, cmd):
    D = planecurves.dual_curve(ctx.poly(cmd.args[0]))
    return "polynomial", {"ring": ring_spec(D.ring), "polynomial": poly_to_str(D)}, []


def _pluecker(ctx, cmd):
    d, delta, kappa = (eval_int(a) for a in cmd.args)
    P = planecurves.pluecker(d, delta, kappa)
    warnings = list(P.warnings)
    if not P.consistent:
        warnings.append("dual-side Pluecker formulas do not close up")
    return "report", {"g": P.g, "dcheck": P.d_check, "flexes": P.flexes, "bitangents": P.bitangents}, warnings


def _genus(ctx, cmd):
    d = eval_int(cmd.args[0])
    deltas = []
    for a in cmd.args[1:]:
        deltas += [eval_int(x) for x in (a.items if isinstance(a, A.ListExpr) else [a])]
    g, warnings = planecurves.plane_genus(d, deltas)
    return "integer", g, list(warnings)


def _adjoint(ctx, cmd):
    F = ctx.poly(cmd.args[0])
    J = planecurves.ordinary_adjoint_ideal(F, _singular_points(cmd.args[1:]))
    return "ideal", polys_value(J.ring, J.generators), []


def _rrspace(ctx, cmd):
    opts = _options(cmd, {"e": "int"})
    F = ctx.poly(cmd.args[0])
    D = planecurves.Divisor(eval_divisor(cmd.args[1], ctx.env))
    sing = _singular_points(cmd.args[2:])
    L = planecurves.riemann_roch_space(F, D, sing, opts.get("e"))
    value = {
        "ring": ring_spec(F.ring),
        "ell": L.ell,
        "degree": L.e,
        "denominator": poly_to_str(L.denominator) if L.denominator is not None else None,
        "numerators": [poly_to_str(n) for n, _ in L.basis],
    }
    return "rational-function list", value, []


def _bezout(ctx, cmd):
    opts = _options(cmd, {"residual": "int"})
    F, G = ctx.poly(cmd.args[0]), ctx.poly(cmd.args[1])
    points = []
    for a in cmd.args[2:]:
        if isinstance(a, A.Point):
            points.append(eval_point(a))
        else:
            points += [(p, n) for p, n in eval_divisor(a, ctx.env)]
    R = planecurves.bezout_certify(F, G, points, opts.get("residual", 0))
    rows = [{"point": point_str(p), "i": i} for p, i, _ in R.points]
    value = {"points": rows, "residual": R.residual, "total": R.total, "expected": R.expected,
             "certified": R.certified}
    return "report", value, list(R.warnings)


HANDLERS: dict[str, Callable] = {
    "gb": _gb, "nf": _nf, "eliminate": _eliminate, "dim": _dim, "intersect": _intersect,
    "quotient": _quotient, "saturate": _saturate, "closure": _closure, "syz": _syz,
    "kernel": _kernel, "resolve": _resolve, "betti": _betti, "hilbert": _hilbert,
    "imult": _imult, "mult": _mult, "milnor": _milnor, "dual": _dual, "pluecker": _pluecker,
    "genus": _genus, "adjoint": _adjoint, "rrspace": _rrspace, "bezout": _bezout,
}


# -- declarations


def _declare(st, env: dict) -> None:
    if isinstance(st, A.RingDecl):
        ring = PolyRing(parse_field(st.field), st.variables, st.weights, st.ordering)
        env[st.name] = ring
        env[RING_KEY] = ring
        return
    ring = env.get(RING_KEY)
    if isinstance(st, A.IdealDecl):
        env[st.name] = Ideal(ring, [eval_poly(e, ring, env) for e in st.polys])
    elif isinstance(st, A.PolyDecl):
        env[st.name] = eval_poly(st.expr, ring, env)
    elif isinstance(st, A.MatrixDecl):
        rows = [[eval_poly(e, ring, env) for e in row] for row in st.rows]
        if len({len(r) for r in rows}) > 1:
            raise _err("matrix rows have different lengths", st)
        env[st.name] = PolyMatrix(ring, rows)
    elif isinstance(st, A.DivisorDecl):
        env[st.name] = eval_divisor(st.expr, env)


def run_command(cmd: A.Command, ctx: Context) -> Result:
    kind, value, warnings = HANDLERS[cmd.op](ctx, cmd)
    return Result(cmd.text or cmd.op, kind, value, warnings)


def iter_results(tree: A.SessionAST, jobs: int = 1, default_ordering: str | None = None) -> Iterator[Result]:
    """Results in statement order; with ``jobs > 1`` commands run on a thread pool."""
    env: dict = {}
    tasks = []
    for st in tree.statements:
        if isinstance(st, A.Command):
            tasks.append((st, Context(dict(env), default_ordering)))
        else:
            _declare(st, env)
    if jobs <= 1:
        for cmd, ctx in tasks:
            yield run_command(cmd, ctx)
        return
    pool = ThreadPoolExecutor(max_workers=jobs)
    try:
        futures = [pool.submit(run_command, cmd, ctx) for cmd, ctx in tasks]
        for fut in futures:
            yield fut.result()
    finally:
        pool.shutdown(wait=False, cancel_futures=True)


def run_session(text: str, jobs: int = 1, default_ordering: str | None = None,
                doc: ResultDocument | None = None) -> ResultDocument:
    """Parse and execute; results accumulate into ``doc`` so a caller can salvage partial output."""
    doc = doc if doc is not None else ResultDocument()
    tree = parse_session(text)
    for r in iter_results(tree, jobs, default_ordering):
        doc.results.append(r)
    return doc

"""Canonical source text for session syntax trees."""
from __future__ import annotations

from . import syntax as A

__all__ = ["format_expr", "format_statement", "format_session"]

# binding strength, loosest first; atoms bind tightest
_LEVEL = {"+": 1, "-": 1, "*": 2, "/": 2}
_NEG, _POW, _ATOM = 3, 4, 5


def _level(e) -> int:
    if isinstance(e, A.BinOp):
        return _LEVEL[e.op]
    if isinstance(e, A.Neg):
        return _NEG
    if isinstance(e, A.Pow):
        return _POW
    return _ATOM


def _wrap(e, need: int) -> str:
    s = format_expr(e)
    return "(%s)" % s if _level(e) < need else s


def format_expr(e) -> str:
    if isinstance(e, A.Num):
        return e.text
    if isinstance(e, A.Name):
        return e.ident
    if isinstance(e, A.BinOp):
        lvl = _LEVEL[e.op]
        # left-associative: the right operand needs strictly tighter binding
        left, right = _wrap(e.left, lvl), _wrap(e.right, lvl + 1)
        sep = " %s " % e.op if lvl == 1 else e.op
        return left + sep + right
    if isinstance(e, A.Neg):
        return "-" + _wrap(e.operand, _NEG)
    if isinstance(e, A.Pow):
        return "%s^%d" % (_wrap(e.base, _ATOM), e.exponent)
    if isinstance(e, A.Point):
        sep = ":" if e.projective else ", "
        return "(%s)" % sep.join(format_expr(c) for c in e.coords)
    if isinstance(e, A.ListExpr):
        return "[%s]" % ", ".join(format_expr(c) for c in e.items)
    raise TypeError("not an expression: %r" % (e,))


def format_statement(s) -> str:
    if isinstance(s, A.RingDecl):
        out = "ring %s = %s[%s]" % (s.name, s.field, ", ".join(s.variables))
        if s.ordering:
            out += " " + s.ordering
        if s.weights is not None:
            out += " weights(%s)" % ", ".join(map(str, s.weights))
        return out + ";"
    if isinstance(s, A.IdealDecl):
        body = ", ".join(format_expr(p) for p in s.polys)
        return ("ideal %s = %s;" % (s.name, body)) if body else "ideal %s = ;" % s.name
    if isinstance(s, A.PolyDecl):
        return "poly %s = %s;" % (s.name, format_expr(s.expr))
    if isinstance(s, A.DivisorDecl):
        return "divisor %s = %s;" % (s.name, format_expr(s.expr))
    if isinstance(s, A.MatrixDecl):
        rows = ", ".join("[%s]" % ", ".join(format_expr(e) for e in row) for row in s.rows)
        return "matrix %s = [%s];" % (s.name, rows)
    if isinstance(s, A.Command):
        parts = [", ".join(format_expr(a) for a in s.args)]
        parts += ["%s=%s" % (o.key, format_expr(o.value)) for o in s.options]
        return "%s %s;" % (s.op, " ".join(p for p in parts if p))
    raise TypeError("not a statement: %r" % (s,))


def format_session(tree: A.SessionAST) -> str:
    return "".join(format_statement(s) + "\n" for s in tree.statements)

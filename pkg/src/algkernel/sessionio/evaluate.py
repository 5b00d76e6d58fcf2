"""Evaluation of expression trees into ring elements, points and divisors."""
from __future__ import annotations

from fractions import Fraction

from ..errors import SessionError
from ..polyring import MultiPoly
from . import syntax as A


def _err(msg: str, node) -> SessionError:
    return SessionError(msg, node.pos.line, node.pos.column)


def eval_poly(e, ring, env: dict) -> MultiPoly:
    """``env`` maps declared names to values; only polynomial values are usable here."""
    if isinstance(e, A.Num):
        return ring(int(e.text))
    if isinstance(e, A.Name):
        if e.ident in ring.variables:
            return ring.var(e.ident)
        v = env.get(e.ident)
        if isinstance(v, MultiPoly):
            if v.ring is not ring and v.ring != ring:
                raise _err("%r belongs to another ring" % e.ident, e)
            return v
        if v is None:
            raise _err("undeclared identifier %r" % e.ident, e)
        raise _err("%r is not a polynomial" % e.ident, e)
    if isinstance(e, A.Neg):
        return -eval_poly(e.operand, ring, env)
    if isinstance(e, A.Pow):
        return eval_poly(e.base, ring, env) ** e.exponent
    if isinstance(e, A.BinOp):
        a = eval_poly(e.left, ring, env)
        b = eval_poly(e.right, ring, env)
        if e.op == "+":
            return a + b
        if e.op == "-":
            return a - b
        if e.op == "*":
            return a * b
        if not b:
            raise _err("division by zero", e)
        if not b.is_constant():
            raise _err("division only by nonzero constants", e)
        return a.scale(ring.field.inv(b.constant_coefficient()))
    raise _err("expected a polynomial", e)


def eval_scalar(e, field=None):
    """Exact rational (or field element when ``field`` given) from a constant expression."""
    if isinstance(e, A.Num):
        v = Fraction(int(e.text))
    elif isinstance(e, A.Neg):
        v = -eval_scalar(e.operand)
    elif isinstance(e, A.Pow):
        v = eval_scalar(e.base) ** e.exponent
    elif isinstance(e, A.BinOp):
        a, b = eval_scalar(e.left), eval_scalar(e.right)
        if e.op == "/":
            if b == 0:
                raise _err("division by zero", e)
            v = a / b
        else:
            v = {"+": a + b, "-": a - b, "*": a * b}[e.op]
    else:
        raise _err("expected a number", e)
    if field is None:
        return v
    if field.characteristic and v.denominator % field.characteristic == 0:
        raise _err("denominator vanishes in the field", e)
    return field.div(field(v.numerator), field(v.denominator))


def eval_int(e) -> int:
    v = eval_scalar(e)
    if v.denominator != 1:
        raise _err("expected an integer", e)
    return int(v)


def eval_point(e) -> tuple:
    """Coordinates as exact rationals; the algorithms map them into the ground field."""
    if not isinstance(e, A.Point):
        raise _err("expected a point like (a:b:c)", e)
    return tuple(eval_scalar(c) for c in e.coords)


def eval_divisor(e, env: dict) -> list:
    """``[(point, n), ...]`` from sums of ``n*(a:b:c)`` terms or a declared divisor name."""
    if isinstance(e, A.Point):
        return [(eval_point(e), 1)]
    if isinstance(e, A.Name):
        v = env.get(e.ident)
        if isinstance(v, list):
            return list(v)
        raise _err("%r is not a divisor" % e.ident, e)
    if isinstance(e, A.Neg):
        return [(p, -n) for p, n in eval_divisor(e.operand, env)]
    if isinstance(e, A.BinOp):
        if e.op in "+-":
            left = eval_divisor(e.left, env)
            right = eval_divisor(e.right, env)
            if e.op == "-":
                right = [(p, -n) for p, n in right]
            return left + right
        if e.op == "*":
            if isinstance(e.left, (A.Num, A.Neg)):
                k = eval_int(e.left)
                return [(p, k * n) for p, n in eval_divisor(e.right, env)]
            if isinstance(e.right, (A.Num, A.Neg)):
                k = eval_int(e.right)
                return [(p, k * n) for p, n in eval_divisor(e.left, env)]
    if isinstance(e, A.Num) and int(e.text) == 0:
        return []
    raise _err("expected a divisor like 2*(1:0:1) - (0:1:1)", e)

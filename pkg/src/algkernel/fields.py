"""Exact coefficient fields: the rationals and prime fields F_p.

Polynomials store raw coefficients (``gmpy2.mpq`` for QQ, ``int`` residues
for F_p) and route all arithmetic through the owning :class:`Field`.
:class:`FieldElement` is the boxed value type handed out by the public API.
"""
from __future__ import annotations

import operator
from fractions import Fraction
from typing import Any

import gmpy2
from gmpy2 import mpq

__all__ = [
    "Field",
    "RationalField",
    "PrimeField",
    "FieldElement",
    "QQ",
    "GF",
    "field_arithmetic",
    "parse_field",
]

_MAX_PRIME = 2**31


class Field:
    """Common interface of the coefficient fields."""

    characteristic: int = 0
    kind: str = ""

    zero: Any
    one: Any

    def __call__(self, value) -> Any:
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def power(self, a, e: int):
        if e < 0:
            return self.power(self.inv(a), -e)
        return self._pow(a, e)

    def _pow(self, a, e):
        raise NotImplementedError

    def to_str(self, a) -> str:
        raise NotImplementedError

    def element(self, value) -> "FieldElement":
        return FieldElement(self, self(value))

    def descriptor(self) -> dict:
        return {"kind": self.kind, "characteristic": self.characteristic}


class RationalField(Field):
    characteristic = 0
    kind = "rationals"

    def __init__(self):
        self.zero = mpq(0)
        self.one = mpq(1)
        # plain operators skip a Python-level call in the hot loops
        self.add = operator.add
        self.sub = operator.sub
        self.mul = operator.mul
        self.neg = operator.neg

    def __call__(self, value):
        if isinstance(value, FieldElement):
            if value.field is not self:
                raise TypeError("cannot coerce element of %s into QQ" % value.field)
            return value.value
        if isinstance(value, str):
            return _parse_rational(value)
        if isinstance(value, float):
            raise TypeError("floating point coefficients are not supported")
        return mpq(value)

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("division by zero")
        return 1 / a

    def div(self, a, b):
        if not b:
            raise ZeroDivisionError("division by zero")
        return a / b

    def _pow(self, a, e):
        return a**e

    def to_str(self, a) -> str:
        if a.denominator == 1:
            return str(a.numerator)
        return "%s/%s" % (a.numerator, a.denominator)

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __reduce__(self):
        return (_qq, ())


class PrimeField(Field):
    kind = "prime_field"

    def __init__(self, p: int):
        p = int(p)
        if p < 2 or p >= _MAX_PRIME or not gmpy2.is_prime(p):
            raise ValueError("F_p needs a prime p < 2^31, got %d" % p)
        self.characteristic = p
        self.zero = 0
        self.one = 1

    def __call__(self, value):
        p = self.characteristic
        if isinstance(value, FieldElement):
            if value.field != self:
                raise TypeError("cannot coerce element of %s into %r" % (value.field, self))
            return value.value
        if isinstance(value, str):
            value = _parse_rational(value)
        if isinstance(value, float):
            raise TypeError("floating point coefficients are not supported")
        if isinstance(value, (Fraction, type(mpq()))):
            num, den = int(value.numerator), int(value.denominator)
            if den % p == 0:
                raise ZeroDivisionError("denominator %d vanishes mod %d" % (den, p))
            return num * pow(den, -1, p) % p
        return int(value) % p

    def add(self, a, b):
        return (a + b) % self.characteristic

    def sub(self, a, b):
        return (a - b) % self.characteristic

    def mul(self, a, b):
        return a * b % self.characteristic

    def neg(self, a):
        return -a % self.characteristic

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("division by zero")
        return pow(a, -1, self.characteristic)

    def div(self, a, b):
        return a * self.inv(b) % self.characteristic

    def _pow(self, a, e):
        return pow(a, e, self.characteristic)

    def to_str(self, a) -> str:
        return str(a)

    def __repr__(self):
        return "GF(%d)" % self.characteristic

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.characteristic == self.characteristic

    def __hash__(self):
        return hash(("GF", self.characteristic))

    def __reduce__(self):
        return (GF, (self.characteristic,))


def _parse_rational(text: str):
    text = text.strip()
    try:
        if "/" in text:
            num, den = text.split("/")
            den = int(den)
            if den == 0:
                raise ZeroDivisionError("division by zero")
            return mpq(int(num), den)
        return mpq(int(text))
    except ValueError:
        raise ValueError("not a rational literal: %r" % text) from None


QQ = RationalField()


def _qq():
    return QQ


_prime_fields: dict[int, PrimeField] = {}


def GF(p: int) -> PrimeField:
    """Return the (shared) prime field with ``p`` elements."""
    field = _prime_fields.get(p)
    if field is None:
        field = _prime_fields[p] = PrimeField(p)
    return field


def parse_field(text: str) -> Field:
    """Parse ``QQ``, ``Fp:<p>``, ``GF(<p>)`` or ``GF<p>``."""
    t = text.strip()
    if t in ("QQ", "Q"):
        return QQ
    for prefix in ("Fp:", "GF(", "GF", "F_"):
        if t.startswith(prefix):
            digits = t[len(prefix):].rstrip(")")
            if digits.isdigit():
                return GF(int(digits))
    raise ValueError("unknown field %r (expected QQ or Fp:<p>)" % text)


class FieldElement:
    """Immutable boxed field element; equal values share one representation."""

    __slots__ = ("field", "value")

    def __init__(self, field: Field, value):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "value", value)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    def _other(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise TypeError("mixed-field operands: %r and %r" % (self.field, other.field))
            return other.value
        return self.field(other)

    def __add__(self, other):
        return FieldElement(self.field, self.field.add(self.value, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub(self.value, self._other(other)))

    def __rsub__(self, other):
        return FieldElement(self.field, self.field.sub(self._other(other), self.value))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul(self.value, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FieldElement(self.field, self.field.div(self.value, self._other(other)))

    def __rtruediv__(self, other):
        return FieldElement(self.field, self.field.div(self._other(other), self.value))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.power(self.value, e))

    def inverse(self):
        return FieldElement(self.field, self.field.inv(self.value))

    def is_zero(self) -> bool:
        return not self.value

    def __bool__(self):
        return bool(self.value)

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        try:
            return self.value == self.field(other)
        except (TypeError, ValueError, ZeroDivisionError):
            return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __str__(self):
        return self.field.to_str(self.value)

    def __repr__(self):
        return "FieldElement(%r, %s)" % (self.field, self)


def field_arithmetic(a: FieldElement, b: FieldElement, op: str) -> FieldElement:
    """Apply ``op`` in {add, sub, mul, div} to two elements of the same field."""
    if a.field != b.field:
        raise TypeError("mixed-field operands: %r and %r" % (a.field, b.field))
    try:
        fn = {"add": a.field.add, "sub": a.field.sub, "mul": a.field.mul, "div": a.field.div}[op]
    except KeyError:
        raise ValueError("unknown field operation %r" % op) from None
    return FieldElement(a.field, fn(a.value, b.value))

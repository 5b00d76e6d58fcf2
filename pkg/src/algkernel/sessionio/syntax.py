"""Syntax tree of session files.

Source positions do not take part in equality, so trees parsed from
differently formatted text compare equal.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union


@dataclass
class Pos:
    line: int
    column: int


# -- expressions


@dataclass
class Num:
    text: str  # integer or a/b literal
    pos: Pos = field(compare=False)


@dataclass
class Name:
    ident: str
    pos: Pos = field(compare=False)


@dataclass
class BinOp:
    op: str  # + - * /
    left: "Expr"
    right: "Expr"
    pos: Pos = field(compare=False)


@dataclass
class Neg:
    operand: "Expr"
    pos: Pos = field(compare=False)


@dataclass
class Pow:
    base: "Expr"
    exponent: int
    pos: Pos = field(compare=False)


@dataclass
class Point:
    coords: list
    projective: bool
    pos: Pos = field(compare=False)


@dataclass
class ListExpr:
    items: list
    pos: Pos = field(compare=False)


Expr = Union[Num, Name, BinOp, Neg, Pow, Point, ListExpr]


@dataclass
class Option:
    key: str
    value: "Expr"
    pos: Pos = field(compare=False)


# -- statements


@dataclass
class RingDecl:
    name: str
    field: str
    variables: list[str]
    ordering: str | None
    weights: list[int] | None
    pos: Pos = field(compare=False)


@dataclass
class IdealDecl:
    name: str
    polys: list
    pos: Pos = field(compare=False)


@dataclass
class PolyDecl:
    name: str
    expr: Expr
    pos: Pos = field(compare=False)


@dataclass
class MatrixDecl:
    name: str
    rows: list  # list of lists of Expr
    pos: Pos = field(compare=False)


@dataclass
class DivisorDecl:
    name: str
    expr: Expr
    pos: Pos = field(compare=False)


@dataclass
class Command:
    op: str
    args: list
    options: list[Option]
    pos: Pos = field(compare=False)
    text: str = field(default="", compare=False)


Statement = Union[RingDecl, IdealDecl, PolyDecl, MatrixDecl, DivisorDecl, Command]


@dataclass
class SessionAST:
    statements: list = field(default_factory=list)

    def __len__(self):
        return len(self.statements)

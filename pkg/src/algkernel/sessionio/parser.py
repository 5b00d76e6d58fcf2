"""Recursive-descent parser for session files.

Precedence (loosest first): ``+ -``, ``* /``, unary minus, ``^``.  So
``-x^2`` is ``-(x^2)``.  Juxtaposition is never multiplication: ``x1`` is
one identifier and ``2x`` is an error.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from ..errors import SessionError
from . import syntax as A

KEYWORDS = ("ring", "ideal", "poly", "matrix", "divisor")
ORDERINGS = ("lex", "degrevlex", "wdegrevlex", "neg_degrevlex", "neg_wdegrevlex", "ds")

# op -> (min positional args, max positional args or None)
COMMANDS: dict[str, tuple[int, int | None]] = {
    "gb": (1, 2),
    "nf": (2, 3),
    "eliminate": (2, None),
    "dim": (1, 1),
    "intersect": (2, None),
    "quotient": (2, 2),
    "saturate": (2, 2),
    "closure": (1, 1),
    "syz": (1, 1),
    "kernel": (2, 3),
    "resolve": (1, 1),
    "betti": (1, 1),
    "hilbert": (1, 1),
    "imult": (2, 3),
    "mult": (1, 2),
    "milnor": (1, 2),
    "dual": (1, 1),
    "pluecker": (3, 3),
    "genus": (1, None),
    "adjoint": (1, None),
    "rrspace": (2, 3),
    "bezout": (2, None),
}

_TOKEN = re.compile(
    r"""
    (?P<ws>[ \t\r\f\v]+)
  | (?P<nl>\n)
  | (?P<comment>\#[^\n]*)
  | (?P<int>[0-9]+)
  | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<sym>[-+*/^()\[\],;:=])
    """,
    re.VERBOSE,
)


@dataclass
class Token:
    kind: str  # int, name, sym, eof
    text: str
    line: int
    column: int

    @property
    def pos(self) -> A.Pos:
        return A.Pos(self.line, self.column)


def tokenize(text: str) -> list[Token]:
    out: list[Token] = []
    line, col, i = 1, 1, 0
    while i < len(text):
        m = _TOKEN.match(text, i)
        if m is None:
            raise SessionError("unexpected character %r" % text[i], line, col)
        kind = m.lastgroup
        s = m.group()
        if kind == "nl":
            line, col = line + 1, 1
        else:
            if kind in ("int", "name", "sym"):
                out.append(Token(kind, s, line, col))
            col += len(s)
        i = m.end()
    out.append(Token("eof", "", line, col))
    return out


def _describe(tok: Token) -> str:
    return "end of input" if tok.kind == "eof" else repr(tok.text)


class Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = tokenize(text)
        self.i = 0

    # -- helpers
    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def advance(self) -> Token:
        t = self.toks[self.i]
        if t.kind != "eof":
            self.i += 1
        return t

    def at(self, text: str) -> bool:
        t = self.tok
        return t.kind in ("sym", "name") and t.text == text

    def fail(self, expected) -> SessionError:
        t = self.tok
        return SessionError("unexpected %s" % _describe(t), t.line, t.column, expected)

    def expect(self, text: str) -> Token:
        if not self.at(text):
            raise self.fail([repr(text)])
        return self.advance()

    def expect_name(self, what="identifier") -> Token:
        if self.tok.kind != "name":
            raise self.fail([what])
        return self.advance()

    def expect_int(self) -> int:
        if self.tok.kind != "int":
            raise self.fail(["integer"])
        return int(self.advance().text)

    # -- expressions
    def expr(self) -> A.Expr:
        left = self.term()
        while self.at("+") or self.at("-"):
            op = self.advance()
            left = A.BinOp(op.text, left, self.term(), op.pos)
        return left

    def term(self) -> A.Expr:
        left = self.unary()
        while self.at("*") or self.at("/"):
            op = self.advance()
            left = A.BinOp(op.text, left, self.unary(), op.pos)
        return left

    def unary(self) -> A.Expr:
        if self.at("-"):
            op = self.advance()
            return A.Neg(self.unary(), op.pos)
        if self.at("+"):
            self.advance()
            return self.unary()
        return self.power()

    def power(self) -> A.Expr:
        base = self.primary()
        if self.at("^"):
            op = self.advance()
            return A.Pow(base, self.expect_int(), op.pos)
        return base

    def primary(self) -> A.Expr:
        t = self.tok
        if t.kind == "int":
            self.advance()
            return A.Num(t.text, t.pos)
        if t.kind == "name":
            self.advance()
            return A.Name(t.text, t.pos)
        if self.at("("):
            self.advance()
            first = self.expr()
            if self.at(":") or self.at(","):
                sep = self.tok.text
                coords = [first]
                while self.at(sep):
                    self.advance()
                    coords.append(self.expr())
                self.expect(")")
                return A.Point(coords, sep == ":", t.pos)
            self.expect(")")
            return first
        if self.at("["):
            self.advance()
            items = []
            if not self.at("]"):
                items.append(self.expr())
                while self.at(","):
                    self.advance()
                    items.append(self.expr())
            self.expect("]")
            return A.ListExpr(items, t.pos)
        raise self.fail(["number", "identifier", "'('", "'['"])

    def expr_list(self) -> list:
        items = [self.expr()]
        while self.at(","):
            self.advance()
            items.append(self.expr())
        return items

    # -- statements
    def session(self) -> A.SessionAST:
        stmts = []
        while self.tok.kind != "eof":
            stmts.append(self.statement())
        return A.SessionAST(stmts)

    def end(self, after_expr: bool = False):
        if not self.at(";"):
            raise self.fail(["operator", "','", "';'"] if after_expr else ["';'"])
        self.advance()

    def statement(self):
        t = self.tok
        if t.kind != "name":
            raise self.fail(["statement"])
        word = t.text
        nxt = self.toks[self.i + 1]
        declaring = word in KEYWORDS and nxt.kind == "name"
        if declaring:
            self.advance()
            name = self.expect_name("name").text
            self.expect("=")
            if word == "ring":
                return self.ring_decl(name, t)
            if word == "ideal":
                polys = [] if self.at(";") else self.expr_list()
                self.end(True)
                return A.IdealDecl(name, polys, t.pos)
            if word == "poly":
                e = self.expr()
                self.end(True)
                return A.PolyDecl(name, e, t.pos)
            if word == "matrix":
                m = self.expr()
                if not isinstance(m, A.ListExpr) or not all(isinstance(r, A.ListExpr) for r in m.items):
                    raise SessionError("matrix must be a list of rows [[..], ..]", t.line, t.column)
                self.end()
                return A.MatrixDecl(name, [r.items for r in m.items], t.pos)
            e = self.expr()
            self.end(True)
            return A.DivisorDecl(name, e, t.pos)
        if word in COMMANDS:
            return self.command()
        raise SessionError("unknown statement %r" % word, t.line, t.column,
                           list(KEYWORDS) + sorted(COMMANDS))

    def ring_decl(self, name, start: Token) -> A.RingDecl:
        ft = self.expect_name("field")
        field = ft.text
        if field == "Fp":
            self.expect(":")
            field = "Fp:%d" % self.expect_int()
        elif field == "GF":
            self.expect("(")
            field = "Fp:%d" % self.expect_int()
            self.expect(")")
        elif field != "QQ":
            raise SessionError("unknown field %r" % field, ft.line, ft.column, ["QQ", "Fp:<p>"])
        self.expect("[")
        variables = [self.expect_name("variable").text]
        while self.at(","):
            self.advance()
            variables.append(self.expect_name("variable").text)
        self.expect("]")
        dup = {v for v in variables if variables.count(v) > 1}
        if dup:
            raise SessionError("duplicate variable %s" % sorted(dup)[0], ft.line, ft.column)
        ordering = weights = None
        while not self.at(";"):
            if self.tok.kind == "name" and self.tok.text in ORDERINGS and ordering is None:
                ordering = self.advance().text
            elif self.at("weights") and weights is None:
                self.advance()
                self.expect("(")
                weights = [self.expect_int()]
                while self.at(","):
                    self.advance()
                    weights.append(self.expect_int())
                self.expect(")")
            else:
                raise self.fail(["ordering", "'weights'", "';'"])
        self.end()
        if weights is not None and len(weights) != len(variables):
            raise SessionError("need %d weights" % len(variables), start.line, start.column)
        return A.RingDecl(name, field, variables, ordering, weights, start.pos)

    def command(self) -> A.Command:
        start = self.advance()
        args, options = [], []
        while not self.at(";"):
            if self.tok.kind == "eof":
                raise self.fail(["';'"])
            if self.tok.kind == "name" and self.toks[self.i + 1].text == "=":
                key = self.advance()
                self.advance()
                options.append(A.Option(key.text, self.expr(), key.pos))
            else:
                args.append(self.expr())
            if self.at(","):
                self.advance()
        end = self.expect(";")
        lo, hi = COMMANDS[start.text]
        if len(args) < lo or (hi is not None and len(args) > hi):
            want = str(lo) if hi == lo else ("%d..%d" % (lo, hi) if hi else "at least %d" % lo)
            noun = "argument" if want == "1" else "arguments"
            raise SessionError("%s takes %s %s, got %d" % (start.text, want, noun, len(args)),
                               start.line, start.column)
        text = _source_slice(self.text, start, end)
        return A.Command(start.text, args, options, start.pos, text)


def _source_slice(text: str, start: Token, end: Token) -> str:
    lines = text.split("\n")
    if start.line == end.line:
        s = lines[start.line - 1][start.column - 1:end.column - 1]
    else:
        chunk = [lines[start.line - 1][start.column - 1:]]
        chunk += lines[start.line:end.line - 1]
        chunk.append(lines[end.line - 1][:end.column - 1])
        s = " ".join(chunk)
    return " ".join(s.split())


# ---------------------------------------------------------------- scoping


def _names_in(e, out: list):
    if isinstance(e, A.Name):
        out.append(e)
    elif isinstance(e, A.BinOp):
        _names_in(e.left, out)
        _names_in(e.right, out)
    elif isinstance(e, (A.Neg, A.Pow)):
        _names_in(e.operand if isinstance(e, A.Neg) else e.base, out)
    elif isinstance(e, A.Point):
        for c in e.coords:
            _names_in(c, out)
    elif isinstance(e, A.ListExpr):
        for c in e.items:
            _names_in(c, out)


def check_names(tree: A.SessionAST) -> None:
    """Reject identifiers that are neither ring variables, declared names nor ordering names."""
    ring_vars: set[str] | None = None
    declared: set[str] = set()
    for st in tree.statements:
        if isinstance(st, A.RingDecl):
            ring_vars = set(st.variables)
            declared.add(st.name)
            continue
        if ring_vars is None and not (isinstance(st, A.Command) and st.op in ("pluecker", "genus")):
            raise SessionError("no ring declared", st.pos.line, st.pos.column, ["ring declaration"])
        exprs = []
        if isinstance(st, A.IdealDecl):
            exprs = st.polys
        elif isinstance(st, (A.PolyDecl, A.DivisorDecl)):
            exprs = [st.expr]
        elif isinstance(st, A.MatrixDecl):
            exprs = [e for row in st.rows for e in row]
        elif isinstance(st, A.Command):
            # a bare name as option value introduces a fresh name (closure name=x0)
            exprs = list(st.args) + [o.value for o in st.options if not isinstance(o.value, A.Name)]
        names: list = []
        for e in exprs:
            _names_in(e, names)
        allowed = (ring_vars or set()) | declared | set(ORDERINGS) | {"true", "false"}
        for n in names:
            if n.ident not in allowed:
                raise SessionError("undeclared identifier %r" % n.ident, n.pos.line, n.pos.column)
        if not isinstance(st, A.Command):
            if ring_vars and st.name in ring_vars:
                raise SessionError("%r is a ring variable" % st.name, st.pos.line, st.pos.column)
            declared.add(st.name)


def parse_session(text: str, check: bool = True) -> A.SessionAST:
    tree = Parser(text).session()
    if check:
        check_names(tree)
    return tree


def parse_expression(text: str) -> A.Expr:
    p = Parser(text)
    e = p.expr()
    if p.tok.kind != "eof":
        raise p.fail(["operator", "end of input"])
    return e


def parse_polynomial(text: str, ring):
    """Parse a polynomial over ``ring``; only its variables may appear."""
    from .evaluate import eval_poly

    return eval_poly(parse_expression(text), ring, {})

"""Text and JSON rendering of results."""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

FORMAT_VERSION = 1


def poly_to_str(f, ordering=None) -> str:
    """Canonical text form in the session grammar, terms descending."""
    ring = f.ring
    field = ring.field
    if not f.coeffs:
        return "0"
    parts: list[str] = []
    names = ring.variables
    for c, e in f.terms(ordering):
        mon = "*".join(
            names[i] if k == 1 else "%s^%d" % (names[i], k) for i, k in enumerate(e) if k
        )
        neg = False
        if field.characteristic == 0 and c < 0:
            neg = True
            c = -c
        cs = field.to_str(c)
        if not mon:
            body = cs
        elif cs == "1":
            body = mon
        else:
            body = cs + "*" + mon
        if not parts:
            parts.append("-" + body if neg else body)
        else:
            parts.append(("- " if neg else "+ ") + body)
    return " ".join(parts)


def fraction_poly_str(coeffs, var: str = "t") -> str:
    """``[c0, c1, ...]`` (constant first) as ``c_k*t^k + ... + c0``."""
    parts = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = Fraction(coeffs[k])
        if not c:
            continue
        mon = "" if k == 0 else (var if k == 1 else "%s^%d" % (var, k))
        a = abs(c)
        body = str(a) if not mon else (mon if a == 1 else "%s*%s" % (a, mon))
        if not parts:
            parts.append("-" + body if c < 0 else body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts) or "0"


def betti_text(entries) -> str:
    """Rows ``j - i``, columns ``i``; zero entries shown as ``-``."""
    table = {(i, j): n for i, j, n in entries}
    if not table:
        return "(empty)"
    cols = range(max(i for i, _ in table) + 1)
    rows = sorted({j - i for i, j in table})
    rows = range(rows[0], rows[-1] + 1)
    width = max(len(str(n)) for n in table.values())
    width = max(width, len(str(cols[-1])), max(len(str(sum(n for (i, _), n in table.items() if i == c))) for c in cols))
    label = max(len("%d:" % r) for r in rows)
    label = max(label, len("total:"))

    def line(head, cells):
        return head.ljust(label) + " " + " ".join(str(c).rjust(width) for c in cells)

    out = [line("", list(cols))]
    out.append("-" * len(out[0]))
    for r in rows:
        out.append(line("%d:" % r, [table.get((i, i + r), "-") for i in cols]))
    out.append("-" * len(out[0]))
    out.append(line("total:", [sum(n for (i, _), n in table.items() if i == c) for c in cols]))
    return "\n".join(out)


def _scalar(v) -> str:
    if v is True:
        return "true"
    if v is False:
        return "false"
    if v is None:
        return "none"
    return str(v)


def _twist(d: int) -> str:
    return "S" if d == 0 else "S(%d)" % -d


def value_text(kind: str, value) -> str:
    if kind in ("gb", "ideal", "saturation"):
        lines = list(value["generators"]) or ["0"]
        if kind == "saturation":
            lines.append("exponent=%d" % value["exponent"])
        return "\n".join(lines)
    if kind == "polynomial":
        return value["polynomial"]
    if kind == "matrix":
        if not value["rows"] or not value["ncols"]:
            return "[]"
        return "\n".join("[" + ", ".join(row) + "]" for row in value["rows"])
    if kind == "betti":
        return betti_text(value["entries"])
    if kind == "resolution":
        lines = []
        for i, tw in enumerate(value["twists"]):
            counts: dict = {}
            for d in tw:
                counts[d] = counts.get(d, 0) + 1
            terms = [_twist(d) + ("^%d" % n if n > 1 else "") for d, n in sorted(counts.items())]
            lines.append("%d: %s" % (i, " + ".join(terms) or "0"))
        lines.append(betti_text(value["betti"]))
        return "\n".join(lines)
    if kind == "hilbert":
        return "P(t) = %s\ndimension=%s degree=%s genus=%s" % (
            fraction_poly_str(value["polynomial"]), value["dimension"], value["degree"],
            _scalar(value["arithmetic_genus"]))
    if kind == "integer":
        return str(value)
    if kind == "rational-function list":
        lines = ["l=%d" % value["ell"]]
        den = value["denominator"]
        lines += ["%s" % n if den is None else "(%s) / (%s)" % (n, den) for n in value["numerators"]]
        return "\n".join(lines)
    if kind == "report":
        head = [(k, v) for k, v in value.items() if not isinstance(v, list)]
        lines = []
        for k, v in value.items():
            if isinstance(v, list):
                for row in v:
                    lines.append(" ".join("%s=%s" % (a, _scalar(b)) for a, b in row.items()))
        lines.append(" ".join("%s=%s" % (k, _scalar(v)) for k, v in head))
        return "\n".join(lines)
    return json.dumps(value)


def render_result(result, fmt: str = "text") -> str:
    if fmt == "json":
        return json.dumps({"kind": result.kind, "value": result.value, "warnings": result.warnings})
    body = value_text(result.kind, result.value)
    return "\n".join([body] + ["warning: %s" % w for w in result.warnings])


def render(doc, fmt: str = "text", headers: bool = True) -> str:
    """Whole document; text output prefixes each result with ``> command`` when ``headers``."""
    if fmt == "json":
        return doc.to_json() + "\n"
    blocks = []
    for r in doc.results:
        text = render_result(r, "text")
        blocks.append(("> %s\n%s" % (r.command, text)) if headers else text)
    if doc.note:
        blocks.append("note: %s" % doc.note)
    return "\n".join(blocks) + ("\n" if blocks else "")

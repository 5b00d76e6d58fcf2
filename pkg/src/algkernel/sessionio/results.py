"""Result documents: per-command outputs with kind tags, JSON-native values."""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Any

from ..fields import parse_field
from ..polyring import PolyRing
from .render import FORMAT_VERSION, poly_to_str

KINDS = (
    "gb", "ideal", "saturation", "polynomial", "matrix", "resolution", "betti",
    "hilbert", "integer", "rational-function list", "report",
)


@dataclass
class Result:
    command: str
    kind: str
    value: Any
    warnings: list[str] = field(default_factory=list)


@dataclass
class ResultDocument:
    results: list[Result] = field(default_factory=list)
    format_version: int = FORMAT_VERSION
    note: str | None = None  # partial-progress note after a timeout

    def to_json(self) -> str:
        doc: dict = {"format_version": self.format_version, "results": [asdict(r) for r in self.results]}
        if self.note:
            doc["note"] = self.note
        return json.dumps(doc, indent=2, sort_keys=False)

    @classmethod
    def from_json(cls, text: str) -> "ResultDocument":
        doc = json.loads(text)
        if doc.get("format_version") != FORMAT_VERSION:
            raise ValueError("unsupported format_version %r" % doc.get("format_version"))
        return cls([Result(**r) for r in doc["results"]], doc["format_version"], doc.get("note"))


# -- value encoders


def field_name(field) -> str:
    return "QQ" if field.characteristic == 0 else "Fp:%d" % field.characteristic


def ring_spec(ring: PolyRing) -> dict:
    return {
        "field": field_name(ring.field),
        "variables": list(ring.variables),
        "weights": list(ring.weights),
        "ordering": ring.ordering.name,
    }


def ring_from_spec(spec: dict) -> PolyRing:
    ordering = spec.get("ordering")
    if ordering in (None, "block", "?"):
        ordering = None
    return PolyRing(parse_field(spec["field"]), spec["variables"], spec.get("weights"), ordering)


def scalar_str(v) -> str:
    v = Fraction(str(v)) if not isinstance(v, (int, Fraction)) else Fraction(v)
    return str(v)


def point_str(p) -> str:
    return "(" + ":".join(scalar_str(v) for v in p) + ")"


def polys_value(ring, polys, order=None, **extra) -> dict:
    """``order`` only affects term order in the strings."""
    out = {"ring": ring_spec(ring), "generators": [poly_to_str(g, order) for g in polys]}
    out.update(extra)
    return out


def matrix_value(M) -> dict:
    rows = [[poly_to_str(M.entries[i][j]) for j in range(M.ncols)] for i in range(M.nrows)]
    return {"ring": ring_spec(M.ring), "nrows": M.nrows, "ncols": M.ncols, "rows": rows}


def betti_value(B) -> dict:
    return {"entries": [[i, j, n] for (i, j), n in sorted(B.entries.items()) if n]}


def hilbert_value(H) -> dict:
    return {
        "polynomial": [str(c) for c in H.hilbert_polynomial],
        "dimension": H.dimension,
        "degree": H.degree,
        "arithmetic_genus": H.arithmetic_genus,
    }


def integer_value(n):
    return "infinite" if n == float("inf") else int(n)

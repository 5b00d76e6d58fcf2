"""Exact computations with polynomial ideals, modules and plane curves."""
from .errors import (
    AlgKernelError,
    HypothesisError,
    InfiniteError,
    NotGroebnerError,
    OrderingError,
    SessionError,
)
from .fields import GF, QQ, parse_field
from .gbasis import Ideal, buchberger, divide_with_remainder, normal_form, reduce_gb
from .orderings import DegRevLex, Lex, NegWDegRevLex, WDegRevLex, make_ordering
from .polyring import FreeModElem, MultiPoly, PolyRing

__version__ = "0.1.0"

__all__ = [
    "AlgKernelError", "HypothesisError", "InfiniteError", "NotGroebnerError", "OrderingError",
    "SessionError", "GF", "QQ", "parse_field", "Ideal", "buchberger", "divide_with_remainder",
    "normal_form", "reduce_gb", "DegRevLex", "Lex", "NegWDegRevLex", "WDegRevLex", "make_ordering",
    "FreeModElem", "MultiPoly", "PolyRing",
]

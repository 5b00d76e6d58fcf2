"""Session language: parsing, execution and rendering."""
from .canonical import format_session
from .parser import parse_polynomial, parse_session
from .render import FORMAT_VERSION, poly_to_str, render
from .results import Result, ResultDocument
from .runner import run_session

__all__ = ["format_session", "parse_polynomial", "parse_session", "render", "poly_to_str", "FORMAT_VERSION",
           "Result", "ResultDocument", "run_session"]

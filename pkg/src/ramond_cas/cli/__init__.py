"""Command-line front end: expression parser, evaluator and verification suites."""

from .evaluate import eval_expr, parse_context
from .grammar import ParseError, parse, render
from .suites import Report, run_suite

__all__ = ["ParseError", "Report", "eval_expr", "parse", "parse_context", "render", "run_suite"]

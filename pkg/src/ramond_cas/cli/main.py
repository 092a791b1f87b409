"""``ramond-cas`` entry point; every subcommand prints a JSON document."""
from __future__ import annotations

import argparse
import json
import sys
import warnings

from .. import __version__
from ..coeff import as_scalar, format_fraction, parse_rational
from ..modules.cover import cover_weight_dim
from ..modules.omega import minimal_annihilating_m
from ..modules.search import exceptional_sweep, submodule_search
from ..modules.verma import l0_eigenvalue, verma_weight_dims
from ..modules.window import Window
from .evaluate import EvalError, evaluate_to_text
from .grammar import ParseError
from .suites import SCHEMA, SUITES, run_suite


def _rational(text: str):
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from exc


def _window(text: str) -> Window:
    try:
        return Window.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"window must look like LO..HI: {text!r}") from exc


def _document(command: str, body: dict) -> dict:
    return {"schema": SCHEMA, "tool_version": __version__, "command": command, **body}


def _cmd_verify(args) -> tuple[dict, int]:
    report = run_suite(args.suite, args.bound)
    return report.as_dict(timing=args.timing), 0 if report.passed else 1


def _cmd_act(args) -> tuple[dict, int]:
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        result = evaluate_to_text(args.expr, args.context, args.vector)
    body = {"context": args.context, "expr": args.expr, "vector": args.vector, "result": result}
    if caught:
        body["warnings"] = sorted({str(w.message) for w in caught})
    return _document("act", body), 0


def _cmd_simplicity(args) -> tuple[dict, int]:
    if args.b_grid:
        rows = exceptional_sweep(args.lam, [parse_rational(x) for x in args.b_grid.split(",")],
                                 args.window, args.depth)
        return _document("simplicity", {"sweep": rows}), 0
    if args.b is None:
        raise EvalError("--b or --b-grid is required")
    rep = submodule_search(args.lam, args.b, args.window, args.depth)
    return _document("simplicity", rep.as_dict()), 0


def _cmd_omega(args) -> tuple[dict, int]:
    lam = as_scalar(args.lam) if args.lam is not None else None
    b = as_scalar(args.b) if args.b is not None else None
    kwargs = {k: v for k, v in (("lam", lam), ("b", b)) if v is not None}
    m = minimal_annihilating_m(variant=args.variant, max_m=args.max_m, **kwargs)
    body = {
        "variant": args.variant,
        "lambda": "symbolic" if lam is None else str(lam),
        "b": "symbolic" if b is None else str(b),
        "max_m": args.max_m,
        "minimal_m": m,
    }
    return _document("omega", body), 0 if m is not None else 1


def _cmd_verma(args) -> tuple[dict, int]:
    dims = verma_weight_dims(args.h, args.c, args.depth)
    body = {
        "h": format_fraction(args.h),
        "c": format_fraction(args.c),
        "dims": dims,
        "l0_eigenvalues": [str(l0_eigenvalue(args.h, n)) for n in range(args.depth + 1)],
    }
    return _document("verma", body), 0


def _cmd_cover(args) -> tuple[dict, int]:
    dim, stable = cover_weight_dim(args.lam, args.b, args.offset, args.truncation)
    body = {
        "lambda": format_fraction(args.lam),
        "b": format_fraction(args.b),
        "offset": args.offset,
        "truncation": args.truncation,
        "dimension": dim,
        "stabilized": stable,
    }
    return _document("cover", body), 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ramond-cas", description=__doc__)
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    def with_out(sp):
        sp.add_argument("--out", help="write JSON here instead of stdout")
        return sp

    v = with_out(sub.add_parser("verify", help="run an invariant suite"))
    v.add_argument("--suite", choices=SUITES + ("all",), required=True)
    v.add_argument("--bound", type=int, default=4)
    v.add_argument("--timing", action="store_true", help="include wall-clock time (not reproducible)")
    v.set_defaults(run=_cmd_verify)

    a = with_out(sub.add_parser("act", help="evaluate an expression, optionally on a vector"))
    a.add_argument("--expr", required=True)
    a.add_argument("--context", default="s",
                   help="s | sbar | stilde | ubar | module(L,B) | weyl(L) | verma(H,C)")
    a.add_argument("--vector")
    a.set_defaults(run=_cmd_act)

    s = with_out(sub.add_parser("simplicity", help="windowed submodule search"))
    s.add_argument("--lambda", dest="lam", type=_rational, required=True)
    s.add_argument("--b", type=_rational)
    s.add_argument("--b-grid", help="comma separated b values for a sweep")
    s.add_argument("--window", type=_window, default=Window(-8, 8))
    s.add_argument("--depth", type=int, default=2)
    s.set_defaults(run=_cmd_simplicity)

    o = with_out(sub.add_parser("omega", help="smallest annihilating differentiator order"))
    o.add_argument("--variant", choices=("LL", "GL"), default="LL")
    o.add_argument("--find-min-m", action="store_true", default=True)
    o.add_argument("--max-m", type=int, default=8)
    o.add_argument("--lambda", dest="lam", type=_rational)
    o.add_argument("--b", type=_rational)
    o.set_defaults(run=_cmd_omega)

    m = with_out(sub.add_parser("verma", help="weight-space dimensions of M(h, c)"))
    m.add_argument("--h", type=_rational, default=0)
    m.add_argument("--c", type=_rational, default=0)
    m.add_argument("--depth", type=int, default=6)
    m.set_defaults(run=_cmd_verma)

    c = with_out(sub.add_parser("cover", help="truncated A-cover weight dimension"))
    c.add_argument("--lambda", dest="lam", type=_rational, required=True)
    c.add_argument("--b", type=_rational, required=True)
    c.add_argument("--offset", type=int, default=0)
    c.add_argument("--truncation", type=int, default=4)
    c.set_defaults(run=_cmd_cover)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        doc, code = args.run(args)
    except (ParseError, EvalError, ValueError) as exc:
        doc = _document(args.command, {"error": str(exc)})
        if isinstance(exc, ParseError):
            doc["position"] = exc.position
        code = 2
    text = json.dumps(doc, indent=2) + "\n"
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())

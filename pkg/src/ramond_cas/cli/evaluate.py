"""Evaluate parsed expressions in an algebra or module context."""
from __future__ import annotations

import re
import warnings
from dataclasses import dataclass

from ..coeff import B, CC, H, LAMBDA, ONE, Scalar, as_scalar, parse_rational, render_linear
from ..env import EnvElement, supercommutator
from ..liealg import C, XI, G, L, T, XiT, legal_in
from ..modules.gamma import GammaVector, ModuleVector, WeylVector, gamma_act, weyl_act
from ..modules.verma import VermaVector, verma_act
from ..twist import twist_value
from . import grammar as g

ALGEBRA_CONTEXTS = {"s": "U(s)", "sbar": "U(sbar)", "stilde": "U(stilde)", "ubar": "Ubar"}
_PARAM_SCALARS = {"lambda": LAMBDA, "b": B, "c": CC, "h": H}


class EvalError(ValueError):
    """Expression is well formed but not meaningful in the chosen context."""


@dataclass(frozen=True)
class Context:
    kind: str  # "algebra", "module", "weyl", "verma"
    flavor: str  # enveloping algebra acting
    params: tuple = ()

    def __str__(self):
        if self.kind == "algebra":
            return next(k for k, v in ALGEBRA_CONTEXTS.items() if v == self.flavor)
        return f"{self.kind}({','.join(str(p) for p in self.params)})"


_CTX = re.compile(r"^\s*(\w+)\s*(?:\((.*)\))?\s*$")


def parse_context(text: str) -> Context:
    """``s``, ``sbar``, ``stilde``, ``ubar``, ``module(lambda,b)``, ``weyl(lambda)``, ``verma(h,c)``.

    Omitted or symbolic module parameters stay symbolic.
    """
    m = _CTX.match(text)
    if not m:
        raise EvalError(f"malformed context {text!r}")
    name, args = m.group(1), m.group(2)
    if name in ALGEBRA_CONTEXTS:
        if args is not None:
            raise EvalError(f"context {name} takes no parameters")
        return Context("algebra", ALGEBRA_CONTEXTS[name])
    defaults = {"module": (LAMBDA, B), "weyl": (LAMBDA,), "verma": (H, CC)}
    if name not in defaults:
        raise EvalError(f"unknown context {name!r}")
    params = defaults[name]
    if args is not None and args.strip():
        parts = [p.strip() for p in args.split(",")]
        if len(parts) != len(params):
            raise EvalError(f"context {name} takes {len(params)} parameters")
        params = tuple(_PARAM_SCALARS[p] if p in _PARAM_SCALARS else as_scalar(parse_rational(p))
                       for p in parts)
    flavor = {"module": "Ubar", "weyl": "", "verma": "U(s)"}[name]
    return Context(name, flavor, params)


class WeylOperator:
    """Formal linear combination of operator words on A(lambda), applied right to left."""

    def __init__(self, terms: dict):
        self.terms = {w: c for w, c in terms.items() if c}

    @classmethod
    def single(cls, op) -> "WeylOperator":
        return cls({(op,): ONE})

    @classmethod
    def scalar(cls, s: Scalar) -> "WeylOperator":
        return cls({(): s})

    def __add__(self, other):
        acc = dict(self.terms)
        for w, c in other.terms.items():
            acc[w] = acc.get(w, Scalar.const(0)) + c
        return WeylOperator(acc)

    def scale(self, s: Scalar):
        return WeylOperator({w: c * s for w, c in self.terms.items()})

    def __mul__(self, other):
        acc: dict = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                acc[w] = acc.get(w, Scalar.const(0)) + c1 * c2
        return WeylOperator(acc)

    def apply(self, v: WeylVector) -> WeylVector:
        total = v.zero_like()
        for w, c in self.terms.items():
            total = total + weyl_act(list(w), v).scale(c)
        return total

    def __str__(self):
        def name(op):
            return f"t({op[1]})" if isinstance(op, tuple) else op
        return render_linear([(c, "*".join(name(o) for o in w) or "1") for w, c in sorted(
            self.terms.items(), key=lambda kv: (len(kv[0]), str(kv[0])))])


def _algebra_generator(e: g.Gen, ctx: Context):
    if e.kind in ("X", "Y"):
        if ctx.flavor != "Ubar":
            raise EvalError(f"{e.kind}({e.index}) lives in the ubar or module context")
        return twist_value(e.kind, e.index)
    gen = {"L": lambda: L(e.index), "G": lambda: G(e.index), "t": lambda: T(e.index),
           "xit": lambda: XiT(e.index), "C": lambda: C, "xi": lambda: XI}[e.kind]()
    if ctx.kind == "module" and gen == C:
        warnings.warn("C acts by zero on Gamma(lambda, b)", stacklevel=2)
        return EnvElement.zero(ctx.flavor)
    lie_flavor = {"U(s)": "s", "U(sbar)": "sbar", "U(stilde)": "stilde", "Ubar": "stilde"}[ctx.flavor]
    if not legal_in(gen, lie_flavor):
        raise EvalError(f"{gen} is not available in context {ctx}")
    return EnvElement.word((gen,), ctx.flavor)


def _weyl_generator(e: g.Gen):
    if e.kind == "t":
        return WeylOperator.single(("t", e.index))
    if e.kind == "xi":
        return WeylOperator.single("xi")
    raise EvalError(f"{g.render(e)} is not an operator of the Weyl context")


def _lift(x, ctx: Context):
    """Promote a scalar to the acting algebra of ``ctx``."""
    if isinstance(x, Scalar):
        if ctx.kind == "weyl":
            return WeylOperator.scalar(x)
        return EnvElement.one(ctx.flavor).scale(x)
    return x


def _is_vector(x) -> bool:
    return isinstance(x, (ModuleVector, VermaVector))


def _act(op, vec, ctx: Context):
    if ctx.kind == "module":
        return gamma_act(op, vec)
    if ctx.kind == "verma":
        return verma_act(op, vec)
    return op.apply(vec)


def _evaluate(e, ctx: Context):
    if isinstance(e, g.Num):
        return as_scalar(e.value)
    if isinstance(e, g.Param):
        return _PARAM_SCALARS[e.name]
    if isinstance(e, g.Gen):
        return _weyl_generator(e) if ctx.kind == "weyl" else _algebra_generator(e, ctx)
    if isinstance(e, g.WeylOp):
        if ctx.kind != "weyl":
            raise EvalError(f"{e.name} is only defined in the weyl context")
        return WeylOperator.single(e.name)
    if isinstance(e, g.Vec):
        if e.kind == "e" and ctx.kind == "module":
            lam, b = ctx.params
            return GammaVector.basis(e.i, e.r, lam, b)
        if e.kind == "e" and ctx.kind == "weyl":
            return WeylVector.basis(e.i, e.r, ctx.params[0])
        if e.kind == "v" and ctx.kind == "verma":
            h, c = ctx.params
            return VermaVector.cyclic(h, c)
        raise EvalError(f"vector {g.render(e)} is not defined in context {ctx}")
    if isinstance(e, g.Neg):
        x = _evaluate(e.operand, ctx)
        return x.scale(-1) if not isinstance(x, Scalar) else -x
    if isinstance(e, (g.Add, g.Sub)):
        x, y = _evaluate(e.left, ctx), _evaluate(e.right, ctx)
        if isinstance(e, g.Sub):
            y = -y if isinstance(y, Scalar) else y.scale(-1)
        if isinstance(x, Scalar) and isinstance(y, Scalar):
            return x + y
        if _is_vector(x) != _is_vector(y):
            raise EvalError("cannot add a vector and an operator")
        return _lift(x, ctx) + _lift(y, ctx)
    if isinstance(e, g.Mul):
        x, y = _evaluate(e.left, ctx), _evaluate(e.right, ctx)
        if _is_vector(x):
            raise EvalError("a vector can only appear as the rightmost factor")
        if isinstance(x, Scalar):
            return x * y if isinstance(y, Scalar) else y.scale(x)
        if isinstance(y, Scalar):
            return x.scale(y)
        if _is_vector(y):
            return _act(x, y, ctx)
        return x * y
    if isinstance(e, g.Pow):
        x = _evaluate(e.base, ctx)
        if _is_vector(x):
            raise EvalError("cannot raise a vector to a power")
        if isinstance(x, Scalar):
            return x ** e.exponent
        out = _lift(ONE, ctx)
        for _ in range(e.exponent):
            out = out * x
        return out
    if isinstance(e, g.Bracket):
        if ctx.kind == "weyl":
            raise EvalError("brackets are not supported in the weyl context")
        x, y = _evaluate(e.left, ctx), _evaluate(e.right, ctx)
        if _is_vector(x) or _is_vector(y):
            raise EvalError("cannot bracket vectors")
        return supercommutator(_lift(x, ctx), _lift(y, ctx), ctx.flavor)
    raise TypeError(f"not an expression: {e!r}")


def eval_expr(e, context) -> object:
    """Evaluate ``e`` (text or tree) in ``context`` (text or :class:`Context`)."""
    if isinstance(e, str):
        e = g.parse(e)
    if isinstance(context, str):
        context = parse_context(context)
    return _evaluate(e, context)


def evaluate_to_text(expr: str, context: str, vector: str | None = None) -> str:
    """Rendered result; with ``vector`` the expression acts on it."""
    tree = g.parse(expr)
    if vector is not None:
        tree = g.Mul(tree, g.parse(vector))
    return str(eval_expr(tree, context))

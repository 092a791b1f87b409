"""The intermediate-series modules Gamma(lambda, b) and the Weyl module A(lambda).

Both have basis ``e(i, r) = t^i xi^r (x) u`` with ``i`` an integer and
``r`` in {0, 1}; the parity of ``e(i, r)`` is ``r`` and its weight is
``lambda + i``.  On Gamma(lambda, b)::

    L_m e(i, r) = (lambda + i + m (b + r/2)) e(i + m, r)
    G_m e(i, 0) = (lambda + i + 2 m b) e(i + m, 1)
    G_m e(i, 1) = -e(i + m, 0)
    t^j xi^s e(i, r) = t^{i+j} xi^{r+s}  (zero when r + s = 2)

C acts by zero.
"""
from __future__ import annotations

import warnings
from fractions import Fraction
from typing import Mapping

from ..coeff import B, LAMBDA, ZERO, Scalar, ScalarLike, as_scalar, render_linear
from ..env import EnvElement
from ..liealg import Generator, LieElement, a1_mod_a2_class, bracket, L, G

__all__ = [
    "ModuleVector",
    "GammaVector",
    "WeylVector",
    "gamma_act",
    "gamma_act_factored",
    "weyl_act",
    "WEYL_OPS",
    "check_module_axiom",
]

Basis = tuple  # (i, r)
ONE_S = Scalar.const(1)


class ModuleVector:
    """Finite combination of basis vectors ``e(i, r)``."""

    __slots__ = ("_terms", "lam")

    def __init__(self, terms: Mapping[Basis, ScalarLike] | None = None, lam: ScalarLike = LAMBDA):
        self.lam = as_scalar(lam)
        acc = {}
        for (i, r), c in (terms or {}).items():
            if r not in (0, 1):
                raise ValueError(f"xi-degree must be 0 or 1, got {r}")
            c = as_scalar(c)
            if c:
                v = acc.get((int(i), r), ZERO) + c
                if v:
                    acc[(int(i), r)] = v
                else:
                    acc.pop((int(i), r), None)
        self._terms = acc

    def _like(self, terms: dict):
        obj = self.__class__.__new__(self.__class__)
        for slot in self.__class__._all_slots():
            setattr(obj, slot, getattr(self, slot))
        obj._terms = terms
        return obj

    @classmethod
    def _all_slots(cls):
        slots = []
        for k in cls.__mro__:
            slots += [s for s in getattr(k, "__slots__", ()) if s != "_terms"]
        return slots

    def params(self) -> tuple:
        return tuple(getattr(self, s) for s in self._all_slots())

    def zero_like(self):
        return self._like({})

    def items(self):
        return sorted(self._terms.items())

    def coefficient(self, i: int, r: int) -> Scalar:
        return self._terms.get((i, r), ZERO)

    def is_zero(self) -> bool:
        return not self._terms

    def support(self) -> list:
        return sorted(self._terms)

    def parity_components(self) -> dict:
        parts = {0: {}, 1: {}}
        for (i, r), c in self._terms.items():
            parts[r][(i, r)] = c
        return {p: self._like(d) for p, d in parts.items() if d}

    def _compatible(self, other):
        if type(other) is not type(self):
            return NotImplemented
        if other.params() != self.params():
            raise ValueError("vectors belong to modules with different parameters")
        return other

    def __add__(self, other):
        if self._compatible(other) is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            v = out.get(k, ZERO) + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return self._like(out)

    def __neg__(self):
        return self._like({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        if self._compatible(other) is NotImplemented:
            return NotImplemented
        return self + (-other)

    def scale(self, s: ScalarLike):
        s = as_scalar(s)
        out = {}
        for k, c in self._terms.items():
            v = c * s
            if v:
                out[k] = v
        return self._like(out)

    def __mul__(self, s):
        return self.scale(s)

    __rmul__ = __mul__

    def evaluate(self, assignment: Mapping[str, Fraction]):
        out = self._like({k: c.evaluate(assignment) for k, c in self._terms.items()})
        out._terms = {k: c for k, c in out._terms.items() if c}
        for slot in self._all_slots():
            setattr(out, slot, getattr(self, slot).evaluate(assignment))
        return out

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return self.is_zero()
        if type(other) is not type(self):
            return NotImplemented
        return self.params() == other.params() and self._terms == other._terms

    def __hash__(self):
        return hash((self.params(), frozenset(self._terms.items())))

    def __str__(self):
        return render_linear([(c, f"e({i},{r})") for (i, r), c in self.items()])

    def __repr__(self):
        return f"{type(self).__name__}({str(self)!r})"


class GammaVector(ModuleVector):
    """Vector of Gamma(lambda, b); parameters default to the formal symbols."""

    __slots__ = ("b",)

    def __init__(self, terms=None, lam: ScalarLike = LAMBDA, b: ScalarLike = B):
        super().__init__(terms, lam)
        self.b = as_scalar(b)

    @classmethod
    def basis(cls, i: int, r: int, lam: ScalarLike = LAMBDA, b: ScalarLike = B) -> "GammaVector":
        return cls({(i, r): 1}, lam, b)


class WeylVector(ModuleVector):
    """Vector of the Weyl-superalgebra module A(lambda) = K / I_lambda."""

    __slots__ = ()

    @classmethod
    def basis(cls, i: int, r: int, lam: ScalarLike = LAMBDA) -> "WeylVector":
        return cls({(i, r): 1}, lam)


# -- Gamma(lambda, b) ----------------------------------------------------------

def _add(acc: dict, key, c: Scalar):
    v = acc.get(key, ZERO) + c
    if v:
        acc[key] = v
    else:
        acc.pop(key, None)


def _a_symbol(gen: Generator, terms: dict) -> dict:
    out: dict = {}
    j = gen.index
    for (i, r), c in terms.items():
        if gen.kind == "T":
            _add(out, (i + j, r), c)
        elif r == 0:
            _add(out, (i + j, 1), c)
    return out


def _gamma_generator(gen: Generator, v: GammaVector) -> dict:
    lam, b = v.lam, v.b
    m = gen.index
    out: dict = {}
    if gen.kind == "C":
        warnings.warn("C acts by zero on Gamma(lambda, b)", stacklevel=3)
        return out
    if gen.is_a:
        return _a_symbol(gen, v._terms)
    for (i, r), c in v._terms.items():
        if gen.kind == "L":
            coeff = lam + (i + m * (b + Fraction(r, 2)))
            _add(out, (i + m, r), c * coeff)
        elif r == 0:
            _add(out, (i + m, 1), c * (lam + i + 2 * m * b))
        else:
            _add(out, (i + m, 0), -c)
    return out


def _act_words(x, v: ModuleVector, act_gen):
    """Act by a Generator / LieElement / EnvElement via ``act_gen`` on generators."""
    if isinstance(x, Generator):
        return v._like(act_gen(x, v))
    if isinstance(x, LieElement):
        acc: dict = {}
        for g, c in x.items():
            for k, y in act_gen(g, v).items():
                _add(acc, k, y * c)
        return v._like(acc)
    if isinstance(x, EnvElement):
        total = v.zero_like()
        for word, c in x.items():
            w = v
            for g in reversed(word):
                w = v._like(act_gen(g, w))
                if w.is_zero():
                    break
            total = total + w.scale(c)
        return total
    raise TypeError(f"cannot act by {x!r}")


def gamma_act(x, v: GammaVector) -> GammaVector:
    """Action of an element of sbar, sbar ⋉ A, s or an enveloping algebra on Gamma(lambda, b)."""
    return _act_words(x, v, _gamma_generator)


# -- factored route: A(lambda) (x) V with V one-dimensional --------------------

def _t_dt(y: dict) -> dict:
    return {(i, r): c * i for (i, r), c in y.items() if i}


def _xi_times(y: dict) -> dict:
    return {(i, 1): c for (i, r), c in y.items() if r == 0}


def _d_xi(y: dict) -> dict:
    return {(i, 0): c for (i, r), c in y.items() if r == 1}


def _t_pow(j: int, y: dict) -> dict:
    return {(i + j, r): c for (i, r), c in y.items()}


def _lin(*pairs) -> dict:
    out: dict = {}
    for coeff, y in pairs:
        coeff = as_scalar(coeff)
        if not coeff:
            continue
        for k, c in y.items():
            _add(out, k, as_scalar(c) * coeff)
    return out


def _v_action(x: LieElement, b: Scalar) -> Scalar:
    """Scalar by which (t-1)sbar acts on the one-dimensional module (X -> b, Y -> 0)."""
    cx, _cy = a1_mod_a2_class(x)
    return cx * b


def _factored_generator(gen: Generator, v: GammaVector) -> dict:
    lam, b = v.lam, v.b
    if gen.kind == "C":
        return {}
    if gen.is_a:
        return _a_symbol(gen, v._terms)
    m = gen.index
    x_val = _v_action(LieElement.basis(L(m)) - LieElement.basis(L(0)), b)  # (L_m - L_0).u
    y_val = _v_action(LieElement.basis(G(m)) - LieElement.basis(G(0)), b)  # (G_m - G_0).u
    out: dict = {}
    for (i, r), c in v._terms.items():
        y = {(i, r): ONE_S}
        sign = -1 if r else 1  # (-1)^{|y|}
        lam_y = _lin((lam, y), (1, _t_dt(y)))
        if gen.kind == "L":
            piece = _lin(
                (x_val, _t_pow(m, y)),
                (-sign * Fraction(m, 2) * y_val, _t_pow(m, _xi_times(y))),
                (1, _t_pow(m, lam_y)),
                (Fraction(m, 2), _t_pow(m, _xi_times(_d_xi(y)))),
            )
        else:
            piece = _lin(
                (sign * y_val, _t_pow(m, y)),
                (2 * x_val, _t_pow(m, _xi_times(y))),
                (1, _t_pow(m, _xi_times(lam_y))),
                (-1, _t_pow(m, _d_xi(y))),
            )
        for k, val in piece.items():
            _add(out, k, val * c)
    return out


def gamma_act_factored(x, v: GammaVector) -> GammaVector:
    """Gamma(lambda, b) action computed from the A(lambda) (x) V tensor description.

    ``L_m`` and ``G_m`` act through the four-term formulas of
    Gamma(lambda, V), with V one-dimensional: ``(L_m - L_0) u = m b u`` and
    ``(G_m - G_0) u = 0`` obtained from the class map onto a_1/a_2.
    """
    return _act_words(x, v, _factored_generator)


# -- Weyl module A(lambda) ----------------------------------------------------

WEYL_OPS = ("t", "xi", "d_t", "d_xi", "G0_image")


def _weyl_op(op, v: WeylVector) -> dict:
    lam = v.lam
    terms = v._terms
    if isinstance(op, tuple):  # ("t", j)
        name, j = op
        if name != "t":
            raise ValueError(f"unknown Weyl operator {op!r}")
        return _t_pow(j, terms)
    if op == "xi":
        return _xi_times(terms)
    if op == "d_xi":
        return _d_xi(terms)
    if op == "d_t":
        out: dict = {}
        for (i, r), c in terms.items():
            _add(out, (i - 1, r), c * (lam + i))
        return out
    if op == "t_dt":
        return {k: c * (lam + k[0]) for k, c in terms.items() if (lam + k[0])}
    if op == "G0_image":
        # xi t d_t - d_xi
        out = {}
        for (i, r), c in terms.items():
            if r == 0:
                _add(out, (i, 1), c * (lam + i))
            else:
                _add(out, (i, 0), -c)
        return out
    raise ValueError(f"unknown Weyl operator {op!r}")


def weyl_act(op, v: WeylVector) -> WeylVector:
    """Apply a generator of the Weyl superalgebra to A(lambda).

    ``op`` is ``("t", j)``, ``"xi"``, ``"d_t"``, ``"d_xi"``, ``"t_dt"`` or
    ``"G0_image"`` (the image of G_0, ``xi t d_t - d_xi``).  A sequence of
    operators acts right to left.
    """
    if isinstance(op, list):
        for o in reversed(op):
            v = weyl_act(o, v)
        return v
    return v._like(_weyl_op(op, v))


# -- module axiom ---------------------------------------------------------------

def check_module_axiom(x, y, v: GammaVector, flavor: str = "stilde") -> GammaVector:
    """``[x,y] v - x (y v) + (-1)^{|x||y|} y (x v)``; zero certifies the pair on ``v``."""
    x = LieElement.coerce(x, flavor)
    y = LieElement.coerce(y, flavor)
    total = v.zero_like()
    for px, xs in x.parity_components().items():
        for py, ys in y.parity_components().items():
            sign = -1 if (px and py) else 1
            total = (total + gamma_act(bracket(xs, ys), v) - gamma_act(xs, gamma_act(ys, v))
                     + gamma_act(ys, gamma_act(xs, v)).scale(sign))
    return total

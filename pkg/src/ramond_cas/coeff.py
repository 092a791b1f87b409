"""Exact coefficients: rationals and polynomials in the parameters lambda, b, c, h.

Rationals are plain :class:`fractions.Fraction` values.  A :class:`Scalar`
is a polynomial with rational coefficients in the four formal parameters,
stored canonically as a map from exponent vectors to non-zero fractions.

Monomials are ordered graded-lexicographically over the variable sequence
(lambda, b, c, h): total degree first, then the exponent of lambda, then b,
c and h.  Rendering lists monomials from largest to smallest, so the
constant term always comes last::

    >>> str(LAMBDA + 3 * B + Fraction(3, 2))
    'lambda + 3*b + 3/2'
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Mapping, Union

__all__ = [
    "PARAMS",
    "Scalar",
    "ScalarLike",
    "LAMBDA",
    "B",
    "CC",
    "H",
    "ZERO",
    "ONE",
    "as_scalar",
    "as_fraction",
    "format_fraction",
    "parse_rational",
    "binomial",
    "render_linear",
]

PARAMS = ("lambda", "b", "c", "h")
_INDEX = {name: k for k, name in enumerate(PARAMS)}
_CONST = (0, 0, 0, 0)

Monomial = tuple  # (e_lambda, e_b, e_c, e_h)
ScalarLike = Union["Scalar", int, Fraction]


def _order_key(mono: Monomial) -> tuple:
    return (sum(mono),) + tuple(mono)


def format_fraction(q: Fraction) -> str:
    """Render ``q`` as ``p/q``, dropping a unit denominator."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse ``"p"`` or ``"p/q"`` (q > 0) into a Fraction."""
    text = text.strip()
    if "/" in text:
        num, den = text.split("/", 1)
        den_i = int(den)
        if den_i <= 0:
            raise ValueError(f"denominator must be positive: {text!r}")
        return Fraction(int(num), den_i)
    return Fraction(int(text))


def binomial(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    from math import comb

    return comb(n, k)


class Scalar:
    """Immutable polynomial in lambda, b, c, h over the rationals."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Rational] | None = None):
        clean = {}
        if terms:
            for mono, coeff in terms.items():
                if coeff:
                    mono = tuple(mono)
                    if len(mono) != 4 or any(e < 0 for e in mono):
                        raise ValueError(f"bad exponent vector {mono!r}")
                    clean[mono] = Fraction(coeff)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "Scalar":
        # terms already canonical: Fraction values, no zeros
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def const(cls, value: Rational) -> "Scalar":
        value = Fraction(value)
        return cls._raw({_CONST: value} if value else {})

    @classmethod
    def var(cls, name: str, power: int = 1) -> "Scalar":
        if name not in _INDEX:
            raise ValueError(f"unknown parameter {name!r}")
        mono = [0, 0, 0, 0]
        mono[_INDEX[name]] = power
        return cls._raw({tuple(mono): Fraction(1)})

    # -- inspection -------------------------------------------------------
    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items(), key=lambda kv: _order_key(kv[0]), reverse=True)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and _CONST in self._terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return self._terms.get(_CONST, Fraction(0))

    def degree(self, name: str | None = None) -> int:
        if not self._terms:
            return -1
        if name is None:
            return max(sum(m) for m in self._terms)
        k = _INDEX[name]
        return max(m[k] for m in self._terms)

    def free_params(self) -> set:
        return {PARAMS[k] for m in self._terms for k in range(4) if m[k]}

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if not other._terms:
            return self
        if not self._terms:
            return other
        out = dict(self._terms)
        for mono, c in other._terms.items():
            v = out.get(mono, 0) + c
            if v:
                out[mono] = v
            else:
                out.pop(mono, None)
        return Scalar._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return Scalar._raw({m: -c for m, c in self._terms.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if not self._terms or not other._terms:
            return ZERO
        if len(other._terms) == 1 and _CONST in other._terms:
            return self.scale(other._terms[_CONST])
        if len(self._terms) == 1 and _CONST in self._terms:
            return other.scale(self._terms[_CONST])
        out: dict = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                mono = (m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2], m1[3] + m2[3])
                v = out.get(mono, 0) + c1 * c2
                if v:
                    out[mono] = v
                else:
                    out.pop(mono, None)
        return Scalar._raw(out)

    __rmul__ = __mul__

    def scale(self, q: Rational) -> "Scalar":
        if not q:
            return ZERO
        if q == 1:
            return self
        q = Fraction(q)
        return Scalar._raw({m: c * q for m, c in self._terms.items()})

    def __truediv__(self, other):
        if isinstance(other, Scalar):
            if not other.is_constant() or other.is_zero():
                raise ZeroDivisionError("division only by non-zero rational constants")
            other = other.constant_value()
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        if other == 0:
            raise ZeroDivisionError("division by zero")
        return self.scale(1 / Fraction(other))

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- comparison -------------------------------------------------------
    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self._terms.get(_CONST, Fraction(0)))
            else:
                self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    # -- substitution -----------------------------------------------------
    def evaluate(self, assignment: Mapping[str, Rational]) -> "Scalar":
        """Substitute rational values for some parameters, keep the rest formal."""
        vals = [None] * 4
        for name, value in assignment.items():
            if name not in _INDEX:
                raise ValueError(f"unknown parameter {name!r}")
            vals[_INDEX[name]] = Fraction(value)
        out: dict = {}
        for mono, c in self._terms.items():
            new = list(mono)
            for k in range(4):
                if vals[k] is not None and mono[k]:
                    c = c * vals[k] ** mono[k]
                    new[k] = 0
            if not c:
                continue
            key = tuple(new)
            v = out.get(key, 0) + c
            if v:
                out[key] = v
            else:
                out.pop(key, None)
        return Scalar._raw(out)

    # -- rendering --------------------------------------------------------
    def _monomial_str(self, mono: Monomial) -> str:
        parts = []
        for k, e in enumerate(mono):
            if e == 1:
                parts.append(PARAMS[k])
            elif e > 1:
                parts.append(f"{PARAMS[k]}^{e}")
        return "*".join(parts)

    def signed_terms(self) -> list:
        """List of ``(sign, body)`` pairs in rendering order."""
        out = []
        for mono, c in self.items():
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            body = self._monomial_str(mono)
            if not body:
                body = format_fraction(mag)
            elif mag != 1:
                body = f"{format_fraction(mag)}*{body}"
            out.append((sign, body))
        return out

    def __str__(self):
        terms = self.signed_terms()
        if not terms:
            return "0"
        sign, body = terms[0]
        text = ("-" if sign == "-" else "") + body
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"Scalar({str(self)!r})"


def _coerce(x) -> Scalar:
    if isinstance(x, Scalar):
        return x
    if isinstance(x, (int, Fraction)):
        return Scalar.const(x)
    return NotImplemented


def as_scalar(x: ScalarLike) -> Scalar:
    out = _coerce(x)
    if out is NotImplemented:
        raise TypeError(f"cannot interpret {x!r} as a Scalar")
    return out


def as_fraction(x: ScalarLike) -> Fraction:
    """Return ``x`` as a Fraction; raises if it still carries parameters."""
    if isinstance(x, Scalar):
        return x.constant_value()
    return Fraction(x)


ZERO = Scalar._raw({})
ONE = Scalar._raw({_CONST: Fraction(1)})
LAMBDA = Scalar.var("lambda")
B = Scalar.var("b")
CC = Scalar.var("c")
H = Scalar.var("h")


def render_linear(pairs) -> str:
    """Render ``[(coeff, basis_text), ...]`` as a signed sum.

    ``basis_text == "1"`` marks the unit, which is printed as the bare
    coefficient.  Multi-term coefficients are parenthesised.
    """
    chunks = []
    for coeff, basis in pairs:
        coeff = as_scalar(coeff)
        terms = coeff.signed_terms()
        if not terms:
            continue
        if len(terms) == 1:
            sign, body = terms[0]
            if basis == "1":
                text = body
            elif body == "1":
                text = basis
            else:
                text = f"{body}*{basis}"
        else:
            sign = "+"
            text = f"({coeff})" if basis == "1" else f"({coeff})*{basis}"
        chunks.append((sign, text))
    if not chunks:
        return "0"
    sign, text = chunks[0]
    out = ("-" if sign == "-" else "") + text
    for sign, text in chunks[1:]:
        out += f" {sign} {text}"
    return out

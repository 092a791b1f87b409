"""Enveloping-algebra arithmetic by PBW straightening.

Elements of U(s), U(sbar), U(stilde) and of Ubar = U(stilde)/I are finite
combinations of *normal words*: tuples of generators sorted by the PBW basis
order ``C < t(i) < xit(i) < L(n) < G(n)`` with no odd generator repeated.
A raw word is rewritten with three rules until none applies:

* swap   ``x y -> (-1)^{|x||y|} y x + [x, y]`` when ``x`` sorts after ``y``;
* square ``g g -> [g, g] / 2`` for odd ``g``;
* (Ubar only) ``t^i t^j -> t^{i+j}``, ``t^i . t^j xi -> t^{i+j} xi``,
  ``t^i xi . t^j xi -> 0`` and ``t^0 -> 1``.

Termination: a swap keeps the length and removes one inversion, every other
rule (and every bracket term) shortens the word, so the pair
(length, inversion count) decreases lexicographically.  Since A-symbols sort
first, a Ubar normal word carries a single A-prefix ``t^i`` or ``t^i xi``
followed by a PBW monomial of sbar, which is the ``A[G_0]``-basis picture.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Mapping, Sequence

from .coeff import ONE, ZERO, Scalar, ScalarLike, as_scalar, render_linear
from .liealg import Generator, LieElement, T, XiT, generator_bracket, legal_in

__all__ = [
    "ENV_FLAVORS",
    "EnvElement",
    "pbw_normalize",
    "normal_form",
    "env_mul",
    "supercommutator",
    "ubar_reduce",
    "word_parity",
    "render_word",
]

ENV_FLAVORS = ("U(s)", "U(sbar)", "U(stilde)", "Ubar")
LIE_FLAVOR = {"U(s)": "s", "U(sbar)": "sbar", "U(stilde)": "stilde", "Ubar": "stilde"}
STRATEGIES = ("leftmost", "rightmost")

Word = tuple


def _pbw_key(g: Generator) -> tuple:
    return g.sort_key()


def word_parity(word: Sequence[Generator]) -> int:
    return sum(g.parity for g in word) % 2


def render_word(word: Sequence[Generator]) -> str:
    return "*".join(str(g) for g in word) if word else "1"


def _combine_a(a: Generator, b: Generator):
    """Product of two A-symbols in Ubar, ``a`` sorted before ``b``."""
    if a.kind == "T" and b.kind == "T":
        return T(a.index + b.index)
    if a.kind == "T" or b.kind == "T":
        return XiT(a.index + b.index)
    return None  # xi . xi = 0


def _rewrite_at(word: Word, p: int, flavor: str, order: Callable) -> list | None:
    """Apply the first rule matching the pair at ``p`` (or the letter, in Ubar)."""
    lie_flavor = LIE_FLAVOR[flavor]
    a = word[p]
    if flavor == "Ubar" and a.kind == "T" and a.index == 0:
        return [(word[:p] + word[p + 1:], Fraction(1))]
    if p + 1 >= len(word):
        return None
    b = word[p + 1]
    head, tail = word[:p], word[p + 2:]
    ka, kb = order(a), order(b)
    if ka > kb:
        sign = -1 if (a.parity and b.parity) else 1
        out = [(head + (b, a) + tail, Fraction(sign))]
        out += [(head + (g,) + tail, q) for g, q in generator_bracket(a, b, lie_flavor)]
        return out
    if a == b and a.parity:
        return [(head + (g,) + tail, q / 2) for g, q in generator_bracket(a, a, lie_flavor)]
    if flavor == "Ubar" and a.is_a and b.is_a:
        g = _combine_a(a, b)
        return [] if g is None else [(head + (g,) + tail, Fraction(1))]
    return None


def _step(word: Word, flavor: str, order: Callable, strategy: str) -> list | None:
    positions = range(len(word)) if strategy == "leftmost" else range(len(word) - 1, -1, -1)
    for p in positions:
        out = _rewrite_at(word, p, flavor, order)
        if out is not None:
            return out
    return None


@lru_cache(maxsize=None)
def _normal_form(word: Word, flavor: str, order: Callable, strategy: str) -> tuple:
    step = _step(word, flavor, order, strategy)
    if step is None:
        return ((word, Fraction(1)),)
    acc: dict = {}
    for w, q in step:
        for w2, q2 in _normal_form(w, flavor, order, strategy):
            v = acc.get(w2, 0) + q * q2
            if v:
                acc[w2] = v
            else:
                acc.pop(w2, None)
    return tuple(acc.items())


def normal_form(word: Iterable[Generator], flavor: str, strategy: str = "leftmost",
                order: Callable = _pbw_key) -> dict:
    """Normal form of a raw word as ``{normal word: Fraction}``.

    ``order`` is the basis order; modules may straighten against another
    total order (the Verma construction does).
    """
    if flavor not in ENV_FLAVORS:
        raise ValueError(f"unknown enveloping flavor {flavor!r}")
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}")
    word = tuple(word)
    lie_flavor = LIE_FLAVOR[flavor]
    for g in word:
        if not legal_in(g, lie_flavor):
            raise ValueError(f"{g} is not a generator of {flavor}")
    return dict(_normal_form(word, flavor, order, strategy))


class EnvElement:
    """Finite linear combination of normal words of one enveloping flavor."""

    __slots__ = ("flavor", "_terms")

    def __init__(self, flavor: str, terms: Mapping[Word, ScalarLike] | None = None):
        if flavor not in ENV_FLAVORS:
            raise ValueError(f"unknown enveloping flavor {flavor!r}")
        self.flavor = flavor
        acc: dict = {}
        for word, c in (terms or {}).items():
            c = as_scalar(c)
            if not c:
                continue
            for w, q in normal_form(word, flavor).items():
                v = acc.get(w, ZERO) + c.scale(q)
                if v:
                    acc[w] = v
                else:
                    acc.pop(w, None)
        self._terms = acc

    @classmethod
    def _raw(cls, flavor: str, terms: dict) -> "EnvElement":
        obj = cls.__new__(cls)
        obj.flavor = flavor
        obj._terms = terms
        return obj

    @classmethod
    def one(cls, flavor: str) -> "EnvElement":
        return cls._raw(flavor, {(): ONE})

    @classmethod
    def zero(cls, flavor: str) -> "EnvElement":
        return cls._raw(flavor, {})

    @classmethod
    def word(cls, gens: Iterable[Generator], flavor: str, coeff: ScalarLike = 1) -> "EnvElement":
        return cls(flavor, {tuple(gens): coeff})

    @classmethod
    def from_lie(cls, x: LieElement | Generator, flavor: str) -> "EnvElement":
        if isinstance(x, Generator):
            return cls(flavor, {(x,): 1})
        return cls(flavor, {(g,): c for g, c in x.items()})

    @classmethod
    def coerce(cls, x, flavor: str) -> "EnvElement":
        if isinstance(x, EnvElement):
            if x.flavor != flavor:
                raise ValueError(f"flavor mismatch: {x.flavor} vs {flavor}")
            return x
        if isinstance(x, (Generator, LieElement)):
            return cls.from_lie(x, flavor)
        return cls._raw(flavor, {(): as_scalar(x)}) if as_scalar(x) else cls.zero(flavor)

    # -- inspection -------------------------------------------------------
    def items(self):
        return sorted(
            self._terms.items(),
            key=lambda kv: (len(kv[0]), tuple(g.render_key() for g in kv[0])),
        )

    def words(self):
        return list(self._terms)

    def coefficient(self, word: Sequence[Generator]) -> Scalar:
        return self._terms.get(tuple(word), ZERO)

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self):
        return len(self._terms)

    def degree(self) -> int:
        return max((len(w) for w in self._terms), default=-1)

    def parity_components(self) -> dict:
        parts: dict = {0: {}, 1: {}}
        for w, c in self._terms.items():
            parts[word_parity(w)][w] = c
        return {p: EnvElement._raw(self.flavor, d) for p, d in parts.items() if d}

    @property
    def parity(self) -> int:
        ps = {word_parity(w) for w in self._terms}
        if len(ps) > 1:
            raise ValueError(f"{self} is not homogeneous")
        return ps.pop() if ps else 0

    def to_lie(self) -> LieElement:
        """Read a combination of length-one words back as a LieElement."""
        terms = {}
        for w, c in self._terms.items():
            if len(w) != 1:
                raise ValueError(f"{render_word(w)} is not a single generator")
            terms[w[0]] = c
        return LieElement(LIE_FLAVOR[self.flavor], terms)

    # -- arithmetic -------------------------------------------------------
    def _same(self, other) -> "EnvElement":
        if isinstance(other, (int, Fraction, Scalar, Generator, LieElement)):
            return EnvElement.coerce(other, self.flavor)
        if not isinstance(other, EnvElement):
            return NotImplemented
        if other.flavor != self.flavor:
            raise ValueError(f"flavor mismatch: {self.flavor} vs {other.flavor}")
        return other

    def __add__(self, other):
        other = self._same(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for w, c in other._terms.items():
            v = out.get(w, ZERO) + c
            if v:
                out[w] = v
            else:
                out.pop(w, None)
        return EnvElement._raw(self.flavor, out)

    __radd__ = __add__

    def __neg__(self):
        return EnvElement._raw(self.flavor, {w: -c for w, c in self._terms.items()})

    def __sub__(self, other):
        other = self._same(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._same(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def scale(self, s: ScalarLike) -> "EnvElement":
        s = as_scalar(s)
        if not s:
            return EnvElement.zero(self.flavor)
        out = {}
        for w, c in self._terms.items():
            v = c * s
            if v:
                out[w] = v
        return EnvElement._raw(self.flavor, out)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            return self.scale(other)
        other = self._same(other)
        if other is NotImplemented:
            return other
        return env_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            return self.scale(other)
        other = self._same(other)
        if other is NotImplemented:
            return other
        return env_mul(other, self)

    def __pow__(self, n: int):
        out = EnvElement.one(self.flavor)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            other = EnvElement.coerce(other, self.flavor)
        if not isinstance(other, EnvElement):
            return NotImplemented
        return self.flavor == other.flavor and self._terms == other._terms

    def __hash__(self):
        return hash((self.flavor, frozenset(self._terms.items())))

    def __str__(self):
        return render_linear([(c, render_word(w)) for w, c in self.items()])

    def __repr__(self):
        return f"EnvElement({self.flavor!r}, {str(self)!r})"


def pbw_normalize(word: Iterable[Generator], flavor: str, strategy: str = "leftmost") -> EnvElement:
    """Straighten a raw word into the PBW basis of ``flavor``."""
    nf = normal_form(word, flavor, strategy)
    return EnvElement._raw(flavor, {w: Scalar.const(q) for w, q in nf.items()})


def env_mul(a: EnvElement, b: EnvElement) -> EnvElement:
    """Concatenate-then-normalise product, extended bilinearly."""
    if a.flavor != b.flavor:
        raise ValueError(f"flavor mismatch: {a.flavor} vs {b.flavor}")
    flavor = a.flavor
    out: dict = {}
    for w1, c1 in a._terms.items():
        for w2, c2 in b._terms.items():
            c = c1 * c2
            for w, q in _normal_form(w1 + w2, flavor, _pbw_key, "leftmost"):
                v = out.get(w, ZERO) + c.scale(q)
                if v:
                    out[w] = v
                else:
                    out.pop(w, None)
    return EnvElement._raw(flavor, out)


def supercommutator(a, b, flavor: str | None = None) -> EnvElement:
    """``a b - (-1)^{|a||b|} b a``, splitting inputs by parity."""
    if flavor is None:
        flavor = next((x.flavor for x in (a, b) if isinstance(x, EnvElement)), None)
        if flavor is None:
            raise ValueError("flavor required when neither argument is an EnvElement")
    a = EnvElement.coerce(a, flavor)
    b = EnvElement.coerce(b, flavor)
    total = EnvElement.zero(flavor)
    for pa, xa in a.parity_components().items():
        for pb, xb in b.parity_components().items():
            sign = -1 if (pa and pb) else 1
            total = total + env_mul(xa, xb) - env_mul(xb, xa).scale(sign)
    return total


def ubar_reduce(a: EnvElement) -> EnvElement:
    """Image of an element of U(stilde) in Ubar = U(stilde)/I."""
    if a.flavor == "Ubar":
        return a
    if a.flavor != "U(stilde)":
        raise ValueError(f"ubar_reduce expects U(stilde), got {a.flavor}")
    return EnvElement("Ubar", dict(a._terms))

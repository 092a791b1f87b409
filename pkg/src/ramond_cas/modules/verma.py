"""Truncated Verma modules M(h, c) over the Ramond algebra.

Orientation: with ``[L_m, L_n] = (n - m) L_{m+n}`` one has
``[L_0, L_{-a}] = -a L_{-a}``, so negative-index generators lower the
L_0 eigenvalue.  The cyclic vector has eigenvalue ``h`` and the depth-n
space has eigenvalue ``h - n``; positive-index generators kill the cyclic
vector.

A basis vector is stored as its PBW word of negative generators, optionally
followed by ``G(0)``.  Acting means straightening ``g * word`` for the order
negatives < G(0) < L(0) < C < positives, then reading off each normal word on
the cyclic vector.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Mapping

from ..coeff import ONE, ZERO, Scalar, ScalarLike, as_scalar
from ..env import EnvElement, normal_form, render_word
from ..liealg import G, Generator, L, LieElement

Word = tuple


def verma_key(g: Generator) -> tuple:
    """Straightening order: negatives (L before G, index ascending), G(0), L(0), C, positives."""
    if g.kind == "C":
        return (3, 0, 0)
    n = g.index
    kind_rank = 0 if g.kind == "L" else 1
    if n < 0:
        return (0, kind_rank, n)
    if n == 0:
        return (1, 0, 0) if g.kind == "G" else (2, 0, 0)
    return (4, kind_rank, n)


def depth(word: Word) -> int:
    return -sum(g.index for g in word)


def _is_basis_word(word: Word) -> bool:
    body = word[:-1] if word and word[-1] == G(0) else word
    return all(g.kind in ("L", "G") and g.index < 0 for g in body) and \
        list(body) == sorted(body, key=verma_key) and \
        len({g for g in body if g.kind == "G"}) == sum(1 for g in body if g.kind == "G")


class VermaVector:
    """Finite combination of PBW basis vectors of M(h, c)."""

    __slots__ = ("_terms", "h", "c")

    def __init__(self, terms: Mapping[Word, ScalarLike] | None = None, h: ScalarLike = 0, c: ScalarLike = 0):
        self.h, self.c = as_scalar(h), as_scalar(c)
        clean = {}
        for w, x in (terms or {}).items():
            w = tuple(w)
            if not _is_basis_word(w):
                raise ValueError(f"{render_word(w)} is not a PBW basis word")
            x = as_scalar(x)
            if x:
                clean[w] = clean.get(w, ZERO) + x
        self._terms = {w: x for w, x in clean.items() if x}

    @classmethod
    def cyclic(cls, h: ScalarLike = 0, c: ScalarLike = 0) -> "VermaVector":
        return cls({(): ONE}, h, c)

    def _like(self, terms: dict) -> "VermaVector":
        out = VermaVector.__new__(VermaVector)
        out.h, out.c = self.h, self.c
        out._terms = {w: x for w, x in terms.items() if x}
        return out

    def items(self):
        return sorted(self._terms.items(), key=lambda kv: (depth(kv[0]), len(kv[0]), [verma_key(g) for g in kv[0]]))

    def coefficient(self, word: Iterable[Generator]) -> Scalar:
        return self._terms.get(tuple(word), ZERO)

    def is_zero(self) -> bool:
        return not self._terms

    def depths(self) -> set:
        return {depth(w) for w in self._terms}

    def __add__(self, other: "VermaVector") -> "VermaVector":
        acc = dict(self._terms)
        for w, x in other._terms.items():
            acc[w] = acc.get(w, ZERO) + x
        return self._like(acc)

    def __neg__(self):
        return self._like({w: -x for w, x in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, s: ScalarLike) -> "VermaVector":
        s = as_scalar(s)
        return self._like({w: x * s for w, x in self._terms.items()})

    def __eq__(self, other):
        if not isinstance(other, VermaVector):
            return NotImplemented
        return self._terms == other._terms and (self.is_zero() or (self.h, self.c) == (other.h, other.c))

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __str__(self):
        if not self._terms:
            return "0"
        from ..coeff import render_linear
        pairs = []
        for w, x in self.items():
            pairs.append((x, "v" if not w else render_word(w) + "*v"))
        return render_linear(pairs)

    __repr__ = __str__


@lru_cache(maxsize=None)
def _straighten(word: Word) -> tuple:
    return tuple(normal_form(word, "U(s)", order=verma_key).items())


def _evaluate_normal(word: Word, h: Scalar, c: Scalar):
    """Split a normal word into (basis word, scalar) or None when a positive generator kills v."""
    cut = len(word)
    for n, g in enumerate(word):
        if verma_key(g)[0] >= 2:
            cut = n
            break
    head, tail = word[:cut], word[cut:]
    value = ONE
    for g in tail:
        if g.kind == "C":
            value = value * c
        elif g.kind == "L" and g.index == 0:
            value = value * h
        else:
            return None
    return head, value


def _act_generator(g: Generator, v: VermaVector) -> dict:
    acc: dict = {}
    for w, x in v._terms.items():
        for nw, q in _straighten((g,) + w):
            hit = _evaluate_normal(nw, v.h, v.c)
            if hit is None:
                continue
            head, value = hit
            y = acc.get(head, ZERO) + x * value.scale(q)
            acc[head] = y
    return acc


def verma_act(g, v: VermaVector) -> VermaVector:
    """Act by a generator, an element of s, or an element of U(s) (words act right to left)."""
    if isinstance(g, Generator):
        if g.is_a:
            raise ValueError(f"{g} does not act on a Verma module over s")
        return v._like(_act_generator(g, v))
    if isinstance(g, LieElement):
        total = v._like({})
        for gen, c in g.items():
            total = total + v._like(_act_generator(gen, v)).scale(c)
        return total
    if isinstance(g, EnvElement):
        total = v._like({})
        for word, c in g.items():
            w = v
            for gen in reversed(word):
                w = verma_act(gen, w)
                if w.is_zero():
                    break
            total = total + w.scale(c)
        return total
    raise TypeError(f"cannot act by {g!r}")


def _partitions(n: int, max_part: int, distinct: bool):
    """Partitions of n into parts <= max_part, as non-increasing tuples."""
    if n == 0:
        yield ()
        return
    for part in range(min(n, max_part), 0, -1):
        nxt = part - 1 if distinct else part
        for rest in _partitions(n - part, nxt, distinct):
            yield (part,) + rest


def verma_basis(n: int) -> list:
    """PBW basis words of depth ``n``, in the straightening order."""
    if n < 0:
        raise ValueError("depth must be non-negative")
    words = []
    for k in range(n + 1):
        for lp in _partitions(k, k, False):
            for gp in _partitions(n - k, n - k, True):
                neg = sorted([L(-a) for a in lp] + [G(-a) for a in gp], key=verma_key)
                words.append(tuple(neg))
                words.append(tuple(neg) + (G(0),))
    return sorted(words, key=lambda w: (len(w), [verma_key(g) for g in w]))


def verma_weight_dims(h: ScalarLike, c: ScalarLike, N: int) -> list:
    """Dimensions of the depth 0..N weight spaces of M(h, c)."""
    if N < 0:
        raise ValueError("depth must be non-negative")
    return [len(verma_basis(n)) for n in range(N + 1)]


def l0_eigenvalue(h: ScalarLike, n: int) -> Scalar:
    """L_0 eigenvalue on the depth-n space under the orientation fixed above."""
    return as_scalar(h) - n

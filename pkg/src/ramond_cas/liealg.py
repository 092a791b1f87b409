"""The Ramond superalgebra s, its centreless quotient sbar and sbar ⋉ A.

Basis symbols are :class:`Generator` tuples.  ``L(n)``, ``G(n)`` and ``C``
span s; ``T(i)`` and ``XiT(i)`` stand for ``t^i`` and ``t^i xi`` in
``A = C[t, t^-1] ⊗ Λ(xi)`` and only live in the flavor ``"stilde"``.
Central terms are dropped at bracket time in ``"sbar"`` and ``"stilde"``.

Bracket conventions (integers m, n, p, q, i)::

    [L_m, L_n] = (n - m) L_{m+n} + δ_{m+n,0} (m^3 - m)/12 C
    [L_m, G_p] = (p - m/2) G_{p+m}
    [G_p, G_q] = -2 L_{p+q} + δ_{p+q,0} (4p^2 - 1)/12 C
    [L_m, t^i]    = i t^{m+i}          [L_m, t^i xi] = (i + m/2) t^{m+i} xi
    [G_m, t^i]    = i t^{m+i} xi       [G_m, t^i xi] = -t^{m+i}

The Virasoro cocycle is taken as (m^3 - m)/12 rather than (n^3 - n)/12:
only this relative sign between the two central terms satisfies the
super-Jacobi identity on triples such as (L_{-4}, G_0, G_4).
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Mapping, NamedTuple

from .coeff import ZERO, Scalar, ScalarLike, as_scalar, binomial, render_linear
from .records import Verification

__all__ = [
    "Generator",
    "LieElement",
    "L",
    "G",
    "C",
    "T",
    "XiT",
    "XI",
    "FLAVORS",
    "bracket",
    "a_on_sbar",
    "super_jacobi",
    "check_a_compatibility",
    "tminus1_expand",
    "verify_rel_subalg",
    "rel_subalg_rhs",
    "in_a_k",
    "a1_mod_a2_class",
    "class_bracket",
    "homogeneous_generators",
]

FLAVORS = ("s", "sbar", "stilde")
_RANK = {"C": 0, "T": 1, "XiT": 2, "L": 3, "G": 4}
_RENDER_RANK = {"T": 0, "XiT": 1, "L": 2, "G": 3, "C": 4}
_ODD = frozenset({"G", "XiT"})


class Generator(NamedTuple):
    kind: str
    index: int = 0

    @property
    def parity(self) -> int:
        return 1 if self.kind in _ODD else 0

    @property
    def is_a(self) -> bool:
        return self.kind in ("T", "XiT")

    @property
    def shift(self) -> int:
        """Weight shift under ad L_0 (0 for C)."""
        return self.index

    def sort_key(self) -> tuple:
        """PBW basis order: C < t(i) < xit(i) < L(n) < G(n)."""
        return (_RANK[self.kind], self.index)

    def render_key(self) -> tuple:
        return (_RENDER_RANK[self.kind], self.index)

    def __str__(self):
        if self.kind == "C":
            return "C"
        if self.kind == "T":
            return f"t({self.index})"
        if self.kind == "XiT":
            return "xi" if self.index == 0 else f"xit({self.index})"
        return f"{self.kind}({self.index})"

    def __repr__(self):
        return str(self)


def L(n: int) -> Generator:
    return Generator("L", int(n))


def G(n: int) -> Generator:
    return Generator("G", int(n))


def T(i: int) -> Generator:
    return Generator("T", int(i))


def XiT(i: int) -> Generator:
    return Generator("XiT", int(i))


C = Generator("C", 0)
XI = XiT(0)


def legal_in(gen: Generator, flavor: str) -> bool:
    if gen.kind == "C":
        return flavor == "s"
    if gen.is_a:
        return flavor == "stilde"
    return True


class LieElement:
    """Finite linear combination of generators of one flavor."""

    __slots__ = ("flavor", "_terms")

    def __init__(self, flavor: str, terms: Mapping[Generator, ScalarLike] | None = None):
        if flavor not in FLAVORS:
            raise ValueError(f"unknown flavor {flavor!r}")
        self.flavor = flavor
        clean = {}
        for gen, c in (terms or {}).items():
            if not legal_in(gen, flavor):
                raise ValueError(f"{gen} is not a generator of {flavor}")
            c = as_scalar(c)
            if c:
                clean[gen] = clean.get(gen, ZERO) + c
                if not clean[gen]:
                    del clean[gen]
        self._terms = clean

    @classmethod
    def _raw(cls, flavor, terms):
        obj = cls.__new__(cls)
        obj.flavor = flavor
        obj._terms = terms
        return obj

    @classmethod
    def basis(cls, gen: Generator, flavor: str = "sbar") -> "LieElement":
        return cls(flavor, {gen: 1})

    @classmethod
    def zero(cls, flavor: str) -> "LieElement":
        return cls._raw(flavor, {})

    @classmethod
    def coerce(cls, x, flavor: str) -> "LieElement":
        if isinstance(x, LieElement):
            return x
        if isinstance(x, Generator):
            return cls(flavor, {x: 1})
        raise TypeError(f"cannot interpret {x!r} as a LieElement")

    # -- container protocol ---------------------------------------------
    def items(self):
        return sorted(self._terms.items(), key=lambda kv: kv[0].render_key())

    def coefficient(self, gen: Generator) -> Scalar:
        return self._terms.get(gen, ZERO)

    def generators(self):
        return list(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self):
        return len(self._terms)

    def parity_components(self) -> dict:
        parts = {0: {}, 1: {}}
        for gen, c in self._terms.items():
            parts[gen.parity][gen] = c
        return {p: LieElement._raw(self.flavor, d) for p, d in parts.items() if d}

    @property
    def parity(self) -> int:
        parities = {g.parity for g in self._terms}
        if len(parities) > 1:
            raise ValueError(f"{self} is not homogeneous")
        return parities.pop() if parities else 0

    def with_flavor(self, flavor: str) -> "LieElement":
        return LieElement(flavor, self._terms)

    # -- arithmetic -------------------------------------------------------
    def _check(self, other):
        if not isinstance(other, LieElement):
            return NotImplemented
        if other.flavor != self.flavor:
            raise ValueError(f"flavor mismatch: {self.flavor} vs {other.flavor}")
        return other

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for gen, c in other._terms.items():
            v = out.get(gen, ZERO) + c
            if v:
                out[gen] = v
            else:
                out.pop(gen, None)
        return LieElement._raw(self.flavor, out)

    def __neg__(self):
        return LieElement._raw(self.flavor, {g: -c for g, c in self._terms.items()})

    def __sub__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __mul__(self, scalar):
        if isinstance(scalar, (LieElement, Generator)):
            return NotImplemented
        s = as_scalar(scalar)
        if not s:
            return LieElement._raw(self.flavor, {})
        out = {}
        for g, c in self._terms.items():
            v = c * s
            if v:
                out[g] = v
        return LieElement._raw(self.flavor, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return self.is_zero()
        if not isinstance(other, LieElement):
            return NotImplemented
        return self.flavor == other.flavor and self._terms == other._terms

    def __hash__(self):
        return hash((self.flavor, frozenset(self._terms.items())))

    def __str__(self):
        return render_linear([(c, str(g)) for g, c in self.items()])

    def __repr__(self):
        return f"LieElement({self.flavor!r}, {str(self)!r})"


def lie(flavor: str, *pairs) -> LieElement:
    """``lie("sbar", (1, L(2)), (-1, L(0)))`` convenience constructor."""
    terms: dict = {}
    for c, g in pairs:
        terms[g] = terms.get(g, ZERO) + as_scalar(c)
    return LieElement(flavor, terms)


# -- generator bracket table -------------------------------------------------

@lru_cache(maxsize=None)
def generator_bracket(x: Generator, y: Generator, flavor: str) -> tuple:
    """``[x, y]`` as a tuple of ``(Generator, Fraction)`` pairs."""
    central = flavor == "s"
    kx, ky = x.kind, y.kind
    if kx == "C" or ky == "C":
        return ()
    if x.is_a and y.is_a:
        return ()
    if x.is_a:
        # [a, g] = -(-1)^{|a||g|} [g, a]
        sign = 1 if (x.parity and y.parity) else -1
        return tuple((g, sign * c) for g, c in generator_bracket(y, x, flavor))
    m, n = x.index, y.index
    out = []
    if kx == "L" and ky == "L":
        if n != m:
            out.append((L(m + n), Fraction(n - m)))
        if central and m + n == 0 and m ** 3 != m:
            out.append((C, Fraction(m ** 3 - m, 12)))
    elif kx == "L" and ky == "G":
        c = Fraction(n) - Fraction(m, 2)
        if c:
            out.append((G(m + n), c))
    elif kx == "G" and ky == "L":
        c = Fraction(m) - Fraction(n, 2)
        if c:
            out.append((G(m + n), -c))
    elif kx == "G" and ky == "G":
        out.append((L(m + n), Fraction(-2)))
        if central and m + n == 0:
            out.append((C, Fraction(4 * m * m - 1, 12)))
    elif kx == "L" and ky == "T":
        if n:
            out.append((T(m + n), Fraction(n)))
    elif kx == "L" and ky == "XiT":
        c = Fraction(n) + Fraction(m, 2)
        if c:
            out.append((XiT(m + n), c))
    elif kx == "G" and ky == "T":
        if n:
            out.append((XiT(m + n), Fraction(n)))
    elif kx == "G" and ky == "XiT":
        out.append((T(m + n), Fraction(-1)))
    else:  # pragma: no cover - exhaustive above
        raise AssertionError((x, y))
    return tuple(out)


def bracket(x, y, flavor: str | None = None) -> LieElement:
    """Super bracket ``[x, y]``, extended bilinearly."""
    if flavor is None:
        flavor = x.flavor if isinstance(x, LieElement) else getattr(y, "flavor", "sbar")
    x = LieElement.coerce(x, flavor)
    y = LieElement.coerce(y, flavor)
    if x.flavor != y.flavor:
        raise ValueError(f"flavor mismatch: {x.flavor} vs {y.flavor}")
    flavor = x.flavor
    out: dict = {}
    for gx, cx in x._terms.items():
        for gy, cy in y._terms.items():
            table = generator_bracket(gx, gy, flavor)
            if not table:
                continue
            cxy = cx * cy
            for g, q in table:
                v = out.get(g, ZERO) + cxy.scale(q)
                if v:
                    out[g] = v
                else:
                    out.pop(g, None)
    return LieElement._raw(flavor, out)


def _sign(px: int, py: int) -> int:
    return -1 if (px and py) else 1


def super_jacobi(x, y, z, flavor: str | None = None) -> LieElement:
    """``[x,[y,z]] - [[x,y],z] - (-1)^{|x||y|} [y,[x,z]]``; zero certifies the triple.

    Non-homogeneous inputs are split by parity and checked componentwise.
    """
    if flavor is None:
        flavor = next((e.flavor for e in (x, y, z) if isinstance(e, LieElement)), "sbar")
    x, y, z = (LieElement.coerce(e, flavor) for e in (x, y, z))
    total = LieElement.zero(x.flavor)
    for px, xs in x.parity_components().items():
        for py, ys in y.parity_components().items():
            for zs in z.parity_components().values():
                total = (
                    total
                    + bracket(xs, bracket(ys, zs))
                    - bracket(bracket(xs, ys), zs)
                    - _sign(px, py) * bracket(ys, bracket(xs, zs))
                )
    return total


# -- A-module structure on sbar ----------------------------------------------

def a_on_sbar(a, x) -> LieElement:
    """Action of ``a`` in A on ``x`` in sbar: ``t^i L_n = L_{n+i}``, ``xi L_n = G_n / 2``, ``xi G_n = 0``."""
    a = LieElement.coerce(a, "stilde")
    x = LieElement.coerce(x, "sbar")
    out: dict = {}
    for ga, ca in a._terms.items():
        if not ga.is_a:
            raise ValueError(f"{ga} is not an element of A")
        for gx, cx in x._terms.items():
            if gx.kind not in ("L", "G"):
                raise ValueError(f"{gx} is not an element of sbar")
            if ga.kind == "T":
                g, q = Generator(gx.kind, gx.index + ga.index), Fraction(1)
            elif gx.kind == "L":
                g, q = G(gx.index + ga.index), Fraction(1, 2)
            else:
                continue
            v = out.get(g, ZERO) + (ca * cx).scale(q)
            if v:
                out[g] = v
            else:
                out.pop(g, None)
    return LieElement._raw("sbar", out)


def check_a_compatibility(y: Generator, a: Generator, x: Generator) -> LieElement:
    """Residue of ``[y, a.x] - (-1)^{|y||a|} a.[y, x] - (y∘a).x`` in sbar.

    Vanishing for all generators certifies that sbar is an sbar ⋉ A module
    with A acting through :func:`a_on_sbar`.
    """
    lhs = bracket(LieElement.basis(y, "sbar"), a_on_sbar(a, x))
    swapped = a_on_sbar(a, bracket(LieElement.basis(y, "sbar"), LieElement.basis(x, "sbar")))
    y_on_a = bracket(LieElement.basis(y, "stilde"), LieElement.basis(a, "stilde"))
    return lhs - _sign(y.parity, a.parity) * swapped - a_on_sbar(y_on_a, x)


# -- (t - 1)-filtration ------------------------------------------------------

def tminus1_expand(k: int, g) -> LieElement:
    """``(t - 1)^k g`` realised as ``sum_r binom(k, r) (-1)^(k-r) t^r g``."""
    if k < 0:
        raise ValueError("k must be non-negative")
    x = LieElement.coerce(g, "sbar")
    if x.flavor != "sbar":
        x = x.with_flavor("sbar")
    out = LieElement.zero("sbar")
    for r in range(k + 1):
        coeff = binomial(k, r) * (-1) ** (k - r)
        out = out + coeff * a_on_sbar(T(r), x)
    return out


def rel_subalg_rhs(k: int, l: int, i: int, j: int, kind: str) -> LieElement:
    """Closed form of ``[(t-1)^k x_i, (t-1)^l y_j]`` for kind in LL, LG, GG."""
    if kind == "LL":
        out = (l - k + j - i) * tminus1_expand(k + l, L(i + j))
        if l != k:
            out = out + (l - k) * tminus1_expand(k + l - 1, L(i + j))
        return out
    if kind == "LG":
        out = (Fraction(j) - Fraction(i, 2)) * tminus1_expand(k + l, G(i + j))
        second = Fraction(l) - Fraction(k, 2)
        if second:
            out = out + second * tminus1_expand(k + l - 1, G(i + j + 1))
        return out
    if kind == "GG":
        return -2 * tminus1_expand(k + l, L(i + j))
    raise ValueError(f"unknown kind {kind!r}")


def verify_rel_subalg(k: int, l: int, i: int, j: int, kind: str) -> Verification:
    left, right = {"LL": (L, L), "LG": (L, G), "GG": (G, G)}[kind]
    lhs = bracket(tminus1_expand(k, left(i)), tminus1_expand(l, right(j)))
    rhs = rel_subalg_rhs(k, l, i, j, kind)
    diff = lhs - rhs
    return Verification(
        f"rel_subalg/{kind}/k={k},l={l},i={i},j={j}",
        {"k": k, "l": l, "i": i, "j": j, "kind": kind},
        diff.is_zero(),
        None if diff.is_zero() else str(diff),
        {"lhs": str(lhs)},
    )


def _falling(n: int, j: int) -> Fraction:
    # binom(n, j) as a polynomial in n, valid for negative n
    out = Fraction(1)
    for r in range(j):
        out *= Fraction(n - r, r + 1)
    return out


def _moments(x: LieElement, kind: str, order: int) -> list:
    """Taylor coefficients at t = 1 of the Laurent polynomial carried by ``kind``."""
    out = []
    for j in range(order):
        total = ZERO
        for g, c in x._terms.items():
            if g.kind == kind:
                total = total + c.scale(_falling(g.index, j))
        out.append(total)
    return out


def _check_sbar(x: LieElement):
    for g in x._terms:
        if g.kind not in ("L", "G"):
            raise ValueError(f"{g} is not an element of sbar")


def in_a_k(x: LieElement, k: int) -> bool:
    """Membership of ``x`` in ``a_k = (t - 1)^k sbar``."""
    _check_sbar(x)
    return all(m.is_zero() for kind in ("L", "G") for m in _moments(x, kind, k))


def a1_mod_a2_class(x: LieElement) -> tuple:
    """Image of ``x`` in ``a_1 / a_2 = span(X, Y)`` as ``(coeff_X, coeff_Y)``.

    ``(t - 1) t^i L_n`` maps to X and ``(t - 1) t^i G_n`` to Y.
    """
    _check_sbar(x)
    (l0, l1), (g0, g1) = _moments(x, "L", 2), _moments(x, "G", 2)
    if not (l0.is_zero() and g0.is_zero()):
        raise ValueError(f"{x} does not lie in (t-1)sbar")
    return l1, g1


def class_bracket(u: tuple, v: tuple) -> tuple:
    """Bracket in ``span(X even, Y odd)`` with ``[X, Y] = Y/2``."""
    (a1, b1), (a2, b2) = u, v
    return ZERO, (a1 * b2 - b1 * a2) / 2


def homogeneous_generators(flavor: str, bound: int) -> list:
    """All generators of ``flavor`` with ``|index| <= bound``."""
    idx = range(-bound, bound + 1)
    gens = [L(n) for n in idx] + [G(n) for n in idx]
    if flavor == "s":
        gens.append(C)
    if flavor == "stilde":
        gens += [T(n) for n in idx] + [XiT(n) for n in idx]
    return gens

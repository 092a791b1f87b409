"""Twist elements X_m, Y_m of Ubar and the identities they satisfy.

For m != 0::

    X_m = t^{-m} L_m + (m/2) t^{-m} xi G_m - L_0
    Y_m = t^{-m} G_m - 2 t^{-m} xi L_m - G_0 + 2 xi L_0

Their span commutes with A and G_0, closes under the supercommutator and is
identified with (t - 1) sbar through ``X_m -> L_m - L_0``,
``Y_m -> G_m - G_0``.  Both defining formulas vanish identically at m = 0,
so ``X_0 = Y_0 = 0`` wherever a closed form produces index 0.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .coeff import Scalar, as_scalar
from .env import EnvElement, supercommutator
from .liealg import G, L, LieElement, T, XI, XiT, bracket
from .records import Verification, check_zero

__all__ = [
    "TwistElement",
    "make_twist",
    "twist_value",
    "twist_span",
    "decompose_twist",
    "phi_image",
    "default_probes",
    "verify_centralizer",
    "verify_twist_brackets",
    "verify_partial_yy",
    "verify_iota_witness",
    "verify_phi_homomorphism",
]

UBAR = "Ubar"


def _w(*gens, coeff=1) -> EnvElement:
    return EnvElement.word(gens, UBAR, coeff)


@dataclass(frozen=True)
class TwistElement:
    kind: str
    m: int
    realization: EnvElement

    def __str__(self):
        return f"{self.kind}({self.m})"


def twist_value(kind: str, m: int) -> EnvElement:
    """Ubar realisation of ``X_m`` or ``Y_m``; the formulas give 0 at m = 0."""
    half_m = Fraction(m, 2)
    if kind == "X":
        return _w(T(-m), L(m)) + _w(XiT(-m), G(m), coeff=half_m) - _w(L(0))
    if kind == "Y":
        return (_w(T(-m), G(m)) - _w(XiT(-m), L(m), coeff=2)
                - _w(G(0)) + _w(XI, L(0), coeff=2))
    raise ValueError(f"unknown twist kind {kind!r}")


def make_twist(kind: str, m: int) -> TwistElement:
    if m == 0:
        raise ValueError("twist index must be non-zero")
    return TwistElement(kind, m, twist_value(kind, m))


def twist_span(coeffs: dict) -> EnvElement:
    """``sum c * X_k`` / ``Y_k`` for ``{("X", k): c, ...}``."""
    out = EnvElement.zero(UBAR)
    for (kind, k), c in coeffs.items():
        if k:
            out = out + twist_value(kind, k).scale(c)
    return out


def decompose_twist(e: EnvElement) -> dict:
    """Coordinates of ``e`` in the span of the X_k, Y_k.

    ``X_k`` is the only spanning element containing the word ``t(-k)*L(k)``
    and ``Y_k`` the only one containing ``t(-k)*G(k)``, which pins the
    coefficients; a non-zero remainder raises ValueError.
    """
    coeffs: dict = {}
    for word, c in e.items():
        if len(word) == 2 and word[0].kind == "T" and word[1].kind in ("L", "G"):
            k = word[1].index
            if k != 0 and word[0].index == -k:
                coeffs[("X" if word[1].kind == "L" else "Y", k)] = c
    rest = e - twist_span(coeffs)
    if not rest.is_zero():
        raise ValueError(f"not in the twist span; remainder {rest}")
    return coeffs


def phi_image(e) -> LieElement:
    """``X_m -> L_m - L_0``, ``Y_m -> G_m - G_0`` extended linearly."""
    if isinstance(e, TwistElement):
        coeffs = {(e.kind, e.m): Scalar.const(1)}
    elif isinstance(e, EnvElement):
        coeffs = decompose_twist(e)
    else:
        coeffs = dict(e)
    out = LieElement.zero("sbar")
    for (kind, k), c in coeffs.items():
        g = L if kind == "X" else G
        out = out + (LieElement.basis(g(k)) - LieElement.basis(g(0))) * as_scalar(c)
    return out


def default_probes(bound: int = 5) -> list:
    idx = range(-bound, bound + 1)
    return [G(0)] + [T(n) for n in idx] + [XiT(n) for n in idx]


def verify_centralizer(m: int, probes=None) -> Verification:
    """[X_m, p] = [Y_m, p] = 0 in Ubar for every probe p in A + C G_0."""
    probes = default_probes() if probes is None else list(probes)
    residues = {}
    ok = True
    for kind in ("X", "Y"):
        x = twist_value(kind, m)
        for p in probes:
            r = supercommutator(x, p, UBAR)
            if not r.is_zero():
                ok = False
                residues[f"[{kind}({m}),{p}]"] = str(r)
    return Verification(
        f"centralizer/m={m}", {"m": m, "probes": [str(p) for p in probes]},
        ok, None if ok else "; ".join(f"{k} = {v}" for k, v in residues.items()),
    )


def _closed_forms(m: int, n: int) -> dict:
    X = lambda k: twist_value("X", k)  # noqa: E731
    Y = lambda k: twist_value("Y", k)  # noqa: E731
    return {
        "XX": X(n).scale(-n) + X(m).scale(m) + X(m + n).scale(n - m),
        "XY": Y(n).scale(-n) + Y(m).scale(Fraction(m, 2)) + Y(m + n).scale(Fraction(n) - Fraction(m, 2)),
        "YY": (X(n) + X(m) - X(n + m)).scale(2),
    }


def verify_twist_brackets(m: int, n: int) -> Verification:
    """[X_m,X_n], [X_m,Y_n], [Y_m,Y_n] against their closed forms in Ubar."""
    if m == 0 or n == 0:
        raise ValueError("twist indices must be non-zero")
    X, Y = twist_value("X", m), twist_value("Y", m)
    Xn, Yn = twist_value("X", n), twist_value("Y", n)
    lhs = {
        "XX": supercommutator(X, Xn),
        "XY": supercommutator(X, Yn),
        "YY": supercommutator(Y, Yn),
    }
    rhs = _closed_forms(m, n)
    residues = {k: lhs[k] - rhs[k] for k in lhs}
    ok = all(r.is_zero() for r in residues.values())
    return Verification(
        f"twist_brackets/m={m},n={n}", {"m": m, "n": n}, ok,
        None if ok else "; ".join(f"{k}: {r}" for k, r in residues.items() if not r.is_zero()),
    )


def verify_partial_yy(m: int, n: int, with_l0: bool = True) -> Verification:
    """[t^-m G_m - 2 t^-m xi L_m, t^-n G_n - 2 t^-n xi L_n] = 2(X_n + X_m - X_{m+n} + L_0)?

    Checks the intermediate line of the [Y, Y] computation; ``with_l0=False``
    tests the variant without the trailing ``L_0``.
    """
    def part(k):
        return _w(T(-k), G(k)) - _w(XiT(-k), L(k), coeff=2)

    lhs = supercommutator(part(m), part(n))
    rhs = twist_value("X", n) + twist_value("X", m) - twist_value("X", m + n)
    if with_l0:
        rhs = rhs + _w(L(0))
    rhs = rhs.scale(2)
    return check_zero(f"partial_yy/m={m},n={n},L0={with_l0}", {"m": m, "n": n}, lhs - rhs)


def verify_iota_witness(m: int) -> Verification:
    """Preimages of L_m and G_m under iota: A[G_0] (x) U(T) -> Ubar."""
    half_m = Fraction(m, 2)
    X, Y = twist_value("X", m), twist_value("Y", m)
    tm, xtm = _w(T(m)), _w(XiT(m))
    l_pre = tm * X - (xtm * Y).scale(half_m) + _w(T(m), L(0)) - (xtm * _w(G(0))).scale(half_m)
    g_pre = tm * Y + (xtm * X).scale(2) + tm * _w(G(0))
    r_l = l_pre - _w(L(m))
    r_g = g_pre - _w(G(m))
    ok = r_l.is_zero() and r_g.is_zero()
    return Verification(
        f"iota/m={m}", {"m": m}, ok,
        None if ok else f"L: {r_l}; G: {r_g}",
    )


def verify_phi_homomorphism(a: tuple, b: tuple) -> Verification:
    """phi([u, v]_Ubar) = [phi u, phi v]_sbar for u, v among the X_k, Y_k."""
    u, v = make_twist(*a), make_twist(*b)
    comm = supercommutator(u.realization, v.realization)
    try:
        lhs = phi_image(comm)
    except ValueError as exc:
        return Verification(f"phi/{u},{v}", {"a": str(u), "b": str(v)}, False, str(exc))
    rhs = bracket(phi_image(u), phi_image(v))
    return check_zero(f"phi/{u},{v}", {"a": str(u), "b": str(v)}, lhs - rhs)

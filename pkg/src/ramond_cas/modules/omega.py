"""Differentiator operators and the telescoped bracket identity behind them."""
from __future__ import annotations

from fractions import Fraction
from itertools import product

from ..coeff import B, LAMBDA, ScalarLike, as_scalar, binomial
from ..env import EnvElement, supercommutator
from ..liealg import G, L
from ..records import Verification
from .gamma import GammaVector, gamma_act

__all__ = [
    "omega_terms",
    "omega_env",
    "omega_apply",
    "minimal_annihilating_m",
    "omega_bracket_identity",
]

VARIANTS = ("LL", "GL")


def omega_terms(k: int, s: int, m: int, variant: str = "LL") -> list:
    """``[(coeff, left, right), ...]`` with ``coeff = (-1)^i binom(m, i)``."""
    if m < 0:
        raise ValueError("m must be non-negative")
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    left = L if variant == "LL" else G
    return [((-1) ** i * binomial(m, i), left(k - i), L(s + i)) for i in range(m + 1)]


def omega_env(k: int, s: int, m: int, variant: str = "LL", flavor: str = "U(sbar)") -> EnvElement:
    out = EnvElement.zero(flavor)
    for c, x, y in omega_terms(k, s, m, variant):
        out = out + EnvElement.word((x, y), flavor, c)
    return out


def omega_apply(k: int, s: int, m: int, variant: str, v: GammaVector) -> GammaVector:
    """Apply ``sum_i (-1)^i binom(m,i) X_{k-i} L_{s+i}`` (X = L or G) to ``v``."""
    total = v.zero_like()
    for c, x, y in omega_terms(k, s, m, variant):
        total = total + gamma_act(x, gamma_act(y, v)).scale(c)
    return total


def _annihilates(m, variant, lam, b, index_range) -> bool:
    for k, s, i in product(index_range, repeat=3):
        for r in (0, 1):
            if not omega_apply(k, s, m, variant, GammaVector.basis(i, r, lam, b)).is_zero():
                return False
    return True


def minimal_annihilating_m(lam: ScalarLike = LAMBDA, b: ScalarLike = B, variant: str = "LL",
                           index_range=range(-3, 4), max_m: int = 8):
    """Smallest m whose differentiators kill Gamma(lambda, b) on the test range, else None.

    Parameters may stay symbolic; vanishing is then an identity of polynomials.
    """
    lam, b = as_scalar(lam), as_scalar(b)
    index_range = list(index_range)
    for m in range(max_m + 1):
        if _annihilates(m, variant, lam, b, index_range):
            return m
    return None


def _final_sum(m: int, j: int, k: int, p: int, upper: int) -> EnvElement:
    out = EnvElement.zero("U(sbar)")
    for i in range(upper + 1):
        c = (-1) ** i * binomial(m + 2, i)
        out = out + EnvElement.word((G(k - i + j + 1), L(p + i - 1)), "U(sbar)", c)
    return out.scale(Fraction(3, 2))


def omega_bracket_identity(m: int, j: int, k: int, p: int) -> Verification:
    """Six-term combination of ``[Omega, G]`` versus its telescoped forms in U(sbar).

    Checks the three-term intermediate sum and the final single sum with
    upper limit ``m + 2``; the shorter limit ``m`` is tested as well and
    reported in ``detail`` (it does not hold).
    """
    U = "U(sbar)"

    def comm(kk, pp, jj):
        return supercommutator(omega_env(kk, pp, m), EnvElement.word((G(jj),), U))

    lhs = (comm(k, p - 1, j + 1) - comm(k, p, j).scale(2) + comm(k, p + 1, j - 1)
           - comm(k + 1, p - 1, j) + comm(k + 1, p, j - 1).scale(2) - comm(k + 1, p + 1, j - 2))

    middle = EnvElement.zero(U)
    for i in range(m + 1):
        c = (-1) ** i * binomial(m, i)
        middle = middle + (
            EnvElement.word((G(k - i + j + 1), L(p + i - 1)), U)
            - EnvElement.word((G(k - i + j), L(p + i)), U).scale(2)
            + EnvElement.word((G(k - i + j - 1), L(p + i + 1)), U)
        ).scale(c)
    middle = middle.scale(Fraction(3, 2))

    final = _final_sum(m, j, k, p, m + 2)
    short = _final_sum(m, j, k, p, m)
    r_mid, r_fin = lhs - middle, lhs - final
    ok = r_mid.is_zero() and r_fin.is_zero()
    residue = None
    if not ok:
        residue = f"intermediate: {r_mid}; final: {r_fin}"
    return Verification(
        f"omega_identity/m={m},j={j},k={k},p={p}",
        {"m": m, "j": j, "k": k, "p": p},
        ok,
        residue,
        {"upper_limit": "m+2", "limit_m_holds": (lhs - short).is_zero()},
    )

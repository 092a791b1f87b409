"""Weight-space dimensions of the A-cover of Gamma(lambda, b), at finite truncation.

The weight ``lambda + p`` space of sbar (x) M is spanned by
``L_{p-k} (x) e(k, r)`` and ``G_{p-k} (x) e(k, r)``.  An element
``sum x_i (x) v_i`` lies in K(M) when ``sum (a x_i) v_i = 0`` for every
``a`` in A, so the cover's weight space is the image of the evaluation map
``x (x) v -> (a -> (a x) v)``.  Truncating k to ``|k| <= K`` and ``a`` to
``t^j, t^j xi`` with ``|j| <= 2K`` gives a lower bound that is non-decreasing
in K; the value is reported together with a stabilisation flag.
"""
from __future__ import annotations

from typing import Callable

from ..coeff import as_fraction
from ..liealg import G, L, LieElement, T, XiT, a_on_sbar
from ..linalg import SparseSpan
from .gamma import GammaVector, gamma_act


def _gamma_action(lam, b) -> Callable:
    lam, b = as_fraction(lam), as_fraction(b)

    def act(x: LieElement, key: tuple) -> dict:
        image = gamma_act(x, GammaVector.basis(key[0], key[1], lam, b))
        return {k: as_fraction(c) for k, c in image.items()}

    return act


def _trivial_action(x: LieElement, key: tuple) -> dict:
    return {}


def _truncated_dim(act: Callable, weight_basis: Callable, p: int, K: int) -> int:
    spanning = []
    for k in range(-K, K + 1):
        for key in weight_basis(k):
            spanning.append((L(p - k), key))
            spanning.append((G(p - k), key))
    probes = [T(j) for j in range(-2 * K, 2 * K + 1)] + [XiT(j) for j in range(-2 * K, 2 * K + 1)]
    span = SparseSpan(order=lambda key: (key[0], key[1], key[2]))
    for x, key in spanning:
        row: dict = {}
        for a in probes:
            ax = a_on_sbar(a, x)
            if ax.is_zero():
                continue
            for (i, r), c in act(ax, key).items():
                row[(a.sort_key(), i, r)] = c
        span.add(row)
    return len(span)


def cover_weight_dim(lam, b, p: int, K: int, trivial: bool = False) -> tuple[int, bool]:
    """``(dimension at truncation K, stabilized)`` for the cover of Gamma(lambda, b).

    ``stabilized`` is true when truncations K and K + 2 give the same value.
    With ``trivial=True`` the one-dimensional trivial module is used instead.
    """
    if K < 1:
        raise ValueError("truncation must be at least 1")
    if trivial:
        act, basis = _trivial_action, (lambda k: [(0, 0)] if k == 0 else [])
    else:
        act, basis = _gamma_action(lam, b), (lambda k: [(k, 0), (k, 1)])
    d = _truncated_dim(act, basis, p, K)
    d2 = _truncated_dim(act, basis, p, K + 2)
    return d, d == d2


def cover_dims(lam, b, p: int, truncations, trivial: bool = False) -> list:
    """Dimensions for each truncation in ``truncations`` (no stabilisation check)."""
    if trivial:
        act, basis = _trivial_action, (lambda k: [(0, 0)] if k == 0 else [])
    else:
        act, basis = _gamma_action(lam, b), (lambda k: [(k, 0), (k, 1)])
    return [_truncated_dim(act, basis, p, K) for K in truncations]

from fractions import Fraction
from itertools import product

import pytest

from ramond_cas.coeff import CC, H, as_fraction
from ramond_cas.env import EnvElement, normal_form
from ramond_cas.liealg import C, G, L, T, bracket
from ramond_cas.linalg import SparseSpan
from ramond_cas.modules.verma import (
    VermaVector, depth, l0_eigenvalue, verma_act, verma_basis, verma_key, verma_weight_dims,
)


def generating_function(n_max):
    """Coefficients of 2 * prod_{n>=1} (1 + q^n) / (1 - q^n), by power-series multiplication."""
    series = [0] * (n_max + 1)
    series[0] = 2
    for n in range(1, n_max + 1):
        geometric = [1 if d % n == 0 else 0 for d in range(n_max + 1)]
        out = [0] * (n_max + 1)
        for a, x in enumerate(series):
            for d, y in enumerate(geometric[: n_max + 1 - a]):
                out[a + d] += x * y
        series = [out[d] + (out[d - n] if d >= n else 0) for d in range(n_max + 1)]
    return series


def spanned_dims(h, c, n_max):
    """Rank of the span of all words in negative generators and G(0) applied to v, depth by depth."""
    def key(vec):
        return {w: as_fraction(x) for w, x in vec.items()}

    bases = []
    for n in range(n_max + 1):
        span = SparseSpan(order=lambda w: (len(w), [verma_key(g) for g in w]))
        found = []
        candidates = [VermaVector.cyclic(h, c)] if n == 0 else []
        for a in range(1, n + 1):
            for g in (L(-a), G(-a)):
                for u in bases[n - a]:
                    candidates.append(verma_act(g, u))
        while candidates:
            vec = candidates.pop()
            if span.add(key(vec)):
                found.append(vec)
                candidates.append(verma_act(G(0), vec))
        bases.append(found)
    return [len(b) for b in bases]


def test_small_depths():
    assert verma_weight_dims(H, CC, 2) == [2, 4, 8]
    assert [str(VermaVector({w: 1}, 0, 0)) for w in verma_basis(1)] == [
        "L(-1)*v", "G(-1)*v", "L(-1)*G(0)*v", "G(-1)*G(0)*v"]


def test_dims_match_generating_function():
    assert verma_weight_dims(0, 0, 12) == generating_function(12)


def test_dims_match_spanning_rank():
    assert spanned_dims(Fraction(3, 7), Fraction(5, 11), 6) == verma_weight_dims(0, 0, 6)


def test_highest_weight_conditions():
    v = VermaVector.cyclic(H, CC)
    assert verma_act(L(1), verma_act(L(-1), v)) == v.scale(-2 * H)
    for n in range(1, 7):
        assert verma_act(L(n), v).is_zero()
        assert verma_act(G(n), v).is_zero()
    assert verma_act(G(0), verma_act(G(0), v)) == v.scale(-H - CC / 24)
    assert verma_act(C, v) == v.scale(CC)


def test_l0_eigenvalues_decrease_with_depth():
    for n in range(7):
        for word in verma_basis(n):
            w = VermaVector({word: 1}, H, CC)
            assert verma_act(L(0), w) == w.scale(l0_eigenvalue(H, n))
    assert l0_eigenvalue(H, 3) == H - 3


def test_basis_words_are_straightening_fixed_points():
    for n in range(5):
        for word in verma_basis(n):
            assert depth(word) == n
            assert normal_form(word, "U(s)", order=verma_key) == {word: 1}


def test_module_property_on_basis():
    """[x, y] acts as x y - (-1)^{|x||y|} y x on M(h, c)."""
    gens = [L(n) for n in range(-2, 3)] + [G(n) for n in range(-2, 3)]
    vectors = [VermaVector({w: 1}, H, CC) for n in range(3) for w in verma_basis(n)]
    for x, y in product(gens, gens):
        sign = -1 if x.parity and y.parity else 1
        br = bracket(x, y, "s")
        for v in vectors:
            lhs = verma_act(br, v)
            rhs = verma_act(x, verma_act(y, v)) - verma_act(y, verma_act(x, v)).scale(sign)
            assert lhs == rhs, (x, y, v)


def test_env_elements_act():
    word = EnvElement.word((L(1), L(-1)), "U(s)")
    assert verma_act(word, VermaVector.cyclic(H, CC)) == VermaVector.cyclic(H, CC).scale(-2 * H)


def test_invalid_input():
    with pytest.raises(ValueError):
        VermaVector({(L(1),): 1})
    with pytest.raises(ValueError):
        verma_act(T(1), VermaVector.cyclic())
    with pytest.raises(ValueError):
        verma_weight_dims(0, 0, -1)

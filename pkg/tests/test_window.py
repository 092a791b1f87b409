import warnings
from fractions import Fraction
from itertools import product

import pytest

from ramond_cas.coeff import LAMBDA, ZERO
from ramond_cas.env import EnvElement
from ramond_cas.liealg import C, G, L, LieElement
from ramond_cas.modules.window import Window, weight_shift, window_matrix


def test_window_basics():
    w = Window.parse("-2..3")
    assert (w.lo, w.hi, str(w)) == (-2, 3, "-2..3")
    assert len(w.basis()) == 12
    assert w.shrink(1) == Window(-1, 2) and w.grow(2) == Window(-4, 5)
    with pytest.raises(ValueError):
        Window(3, 1)


def test_l0_is_diagonal():
    w = Window(-3, 3)
    op = window_matrix(L(0), LAMBDA, 0, w)
    for a, t in enumerate(op.basis):
        for k, s in enumerate(op.basis):
            expected = LAMBDA + t[0] if a == k else ZERO
            assert op.entries[a][k] == expected
    assert op.spill == 0 and op.is_banded() and op.shift == 0


def test_g1_on_two_sites():
    op = window_matrix(G(1), 1, 0, Window(0, 1))
    assert op.size == 4
    assert op.entry((1, 1), (0, 0)) == 1          # (lambda + i + 2mb) at i=0
    assert op.entry((1, 0), (0, 1)) == -1
    nonzero = {(t, s) for t in op.basis for s in op.basis if op.entry(t, s)}
    assert nonzero == {((1, 1), (0, 0)), ((1, 0), (0, 1))}
    assert op.spill == 2


def test_central_element_gives_zero_matrix():
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        op = window_matrix(C, 0, 0, Window(-1, 1))
    assert all(not x for row in op.entries for x in row)


def test_mixed_weights_rejected():
    with pytest.raises(ValueError):
        window_matrix(LieElement.basis(L(1)) + LieElement.basis(L(2)), 0, 0, Window(0, 2))
    assert weight_shift(EnvElement.word((G(2), L(-5)), "U(sbar)")) == -3


def test_products_agree_on_doubly_shrunk_interior():
    w = Window(-5, 5)
    lam, b = Fraction(1, 3), Fraction(2, 7)
    gens = [L(-2), L(1), G(-1), G(2), L(0)]
    for x, y in product(gens, gens):
        prod = window_matrix(x, lam, b, w) @ window_matrix(y, lam, b, w)
        direct = window_matrix(EnvElement.word((x, y), "U(sbar)"), lam, b, w)
        inner = w.shrink(abs(x.index) + abs(y.index))
        assert prod.shift == direct.shift
        assert prod.agrees_on(direct, inner), (x, y)


def test_symbolic_matrix_specialises():
    w = Window(-1, 1)
    sym = window_matrix(G(-1), LAMBDA, Fraction(1, 2), w)
    num = window_matrix(G(-1), Fraction(3), Fraction(1, 2), w)
    assert sym.evaluate({"lambda": Fraction(3)}).entries == num.entries

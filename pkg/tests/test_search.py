from fractions import Fraction

import pytest

from ramond_cas.liealg import G, L
from ramond_cas.linalg import SparseSpan
from ramond_cas.modules.gamma import GammaVector, gamma_act
from ramond_cas.modules.search import exceptional_sweep, submodule_search
from ramond_cas.modules.window import Window


def test_zero_parameters_have_the_vacuum_submodule():
    rep = submodule_search(0, 0, Window(-8, 8), 2)
    assert rep.found and rep.stable
    assert rep.subspaces == [[{(0, 0): Fraction(1)}]]
    assert rep.as_dict()["proper_submodules"] == [{"dim": 1, "spanning_vectors": ["1*e(0,0)"]}]


def test_vacuum_span_is_exactly_invariant():
    v = GammaVector.basis(0, 0, 0, 0)
    for m in range(-12, 13):
        assert gamma_act(L(m), v).is_zero()
        assert gamma_act(G(m), v).is_zero()


def test_generic_point_has_no_submodule():
    rep = submodule_search(Fraction(1, 2), Fraction(1, 3), Window(-8, 8), 2)
    assert not rep.found and rep.stable
    assert rep.interior_dim == 26


def test_reported_subspaces_are_invariant_on_the_interior():
    for lam, b in [(0, 0), (0, 1), (0, Fraction(1, 2))]:
        w = Window(-6, 6)
        rep = submodule_search(lam, b, w, 2)
        interior = w.shrink(2)
        for basis in rep.subspaces:
            span = SparseSpan()
            for vec in basis:
                span.add(vec)
            for vec in basis:
                for m in range(-2, 3):
                    for g in (L(m), G(m)):
                        img = gamma_act(g, GammaVector(vec, lam, b))
                        proj = {k: c.constant_value() for k, c in img.items() if k[0] in interior}
                        assert span.contains(proj)


def test_sweep_is_data():
    rows = exceptional_sweep(0, [Fraction(-1), Fraction(0), Fraction(1, 3), Fraction(1)], Window(-6, 6), 2)
    assert [r["b"] for r in rows] == ["-1", "0", "1/3", "1"]
    assert all(set(r) >= {"exceptional", "stable", "proper_submodules"} for r in rows)
    assert rows[1]["exceptional"]


def test_narrow_window_rejected():
    with pytest.raises(ValueError):
        submodule_search(0, 0, Window(0, 2), 2)
    with pytest.raises(ValueError):
        submodule_search(0, 0, Window(-4, 4), 0)

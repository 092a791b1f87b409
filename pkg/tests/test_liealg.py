from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ramond_cas.coeff import as_scalar
from ramond_cas.liealg import (
    C, G, L, LieElement, T, XiT, a1_mod_a2_class, a_on_sbar, bracket,
    check_a_compatibility, class_bracket, homogeneous_generators, in_a_k, lie,
    rel_subalg_rhs, super_jacobi, tminus1_expand, verify_rel_subalg,
)


# -- an independent table of the s brackets, with a switchable Virasoro cocycle ------

def table_bracket(x, y, cocycle_in_m=True):
    """Dict {(kind, index) or "C": coeff} for [x, y] in s, written out from scratch."""
    (a, m), (b, n) = x, y
    out = {}
    if a == "L" and b == "L":
        out[("L", m + n)] = n - m
        if m + n == 0:
            out["C"] = Fraction(m ** 3 - m, 12) if cocycle_in_m else Fraction(n ** 3 - n, 12)
    elif a == "L" and b == "G":
        out[("G", m + n)] = Fraction(n) - Fraction(m, 2)
    elif a == "G" and b == "L":
        out[("G", m + n)] = -(Fraction(m) - Fraction(n, 2))
    else:
        out[("L", m + n)] = -2
        if m + n == 0:
            out["C"] = Fraction(4 * m * m - 1, 12)
    return {k: v for k, v in out.items() if v}


def table_jacobi(x, y, z, cocycle_in_m):
    def br(u, v):  # u, v dicts -> dict, C central
        acc = {}
        for gu, cu in u.items():
            for gv, cv in v.items():
                if "C" in (gu, gv):
                    continue
                for k, c in table_bracket(gu, gv, cocycle_in_m).items():
                    acc[k] = acc.get(k, 0) + cu * cv * c
        return {k: v for k, v in acc.items() if v}

    def parity(g):
        return 1 if g[0] == "G" else 0

    X, Y, Z = ({x: 1}, {y: 1}, {z: 1})
    sign = -1 if parity(x) and parity(y) else 1
    total = {}
    for part, s in ((br(X, br(Y, Z)), 1), (br(br(X, Y), Z), -1), (br(Y, br(X, Z)), -sign)):
        for k, c in part.items():
            total[k] = total.get(k, 0) + s * c
    return {k: v for k, v in total.items() if v}


def as_table(e: LieElement) -> dict:
    return {("C" if g.kind == "C" else (g.kind, g.index)): c.constant_value() for g, c in e.items()}


def test_cocycle_in_n_breaks_jacobi_with_this_gg_term():
    residue = table_jacobi(("L", -4), ("G", 0), ("G", 4), cocycle_in_m=False)
    assert residue == {"C": -20}


def test_adopted_table_matches_independent_oracle():
    idx = range(-4, 5)
    gens = [("L", n) for n in idx] + [("G", n) for n in idx]
    for x, y in product(gens, gens):
        lib = bracket(L(x[1]) if x[0] == "L" else G(x[1]), L(y[1]) if y[0] == "L" else G(y[1]), "s")
        assert as_table(lib) == table_bracket(x, y), (x, y)
    for x, y, z in product(gens[::2], repeat=3):
        assert table_jacobi(x, y, z, cocycle_in_m=True) == {}


def test_bracket_examples():
    assert str(bracket(L(2), L(-2), "s")) == "-4*L(0) + 1/2*C"
    assert str(bracket(G(1), G(-1), "s")) == "-2*L(0) + 1/4*C"
    assert bracket(L(2), G(1)).is_zero()
    assert str(bracket(L(2), T(3), "stilde")) == "3*t(5)"
    assert str(bracket(G(0), XiT(0), "stilde")) == "-t(0)"
    assert str(bracket(G(0), G(0), "sbar")) == "-2*L(0)"


def test_bracket_rejects_foreign_generators():
    with pytest.raises(ValueError):
        bracket(L(1), T(0), "sbar")
    with pytest.raises(ValueError):
        bracket(C, L(0), "sbar")


# -- sbar realised by super-derivations of A = C[t, t^-1] (x) Lambda(xi) ----------------

def rho(gen, f):
    """Act on f = {(i, r): c} meaning sum c t^i xi^r by the vector field of ``gen``."""
    out = {}

    def add(k, c):
        out[k] = out.get(k, 0) + c

    n = gen.index
    for (i, r), c in f.items():
        if gen.kind == "L":  # t^{n+1} d_t + n/2 t^n xi d_xi
            add((i + n, r), c * (i + Fraction(n, 2) * r))
        elif r == 0:  # t^{n+1} xi d_t - t^n d_xi
            add((i + n, 1), c * i)
        else:
            add((i + n, 0), -c)
    return {k: v for k, v in out.items() if v}


def rho_element(e: LieElement, f):
    out = {}
    for g, c in e.items():
        for k, v in rho(g, f).items():
            out[k] = out.get(k, 0) + c.constant_value() * v
    return {k: v for k, v in out.items() if v}


def test_sbar_brackets_match_vector_fields():
    gens = homogeneous_generators("sbar", 3)
    monomials = [{(i, r): 1} for i in range(-3, 4) for r in (0, 1)]
    for x, y in product(gens, gens):
        sign = -1 if x.parity and y.parity else 1
        rhs_el = bracket(x, y, "sbar")
        for f in monomials:
            lhs = rho(x, rho(y, f))
            for k, v in rho(y, rho(x, f)).items():
                lhs[k] = lhs.get(k, 0) - sign * v
            lhs = {k: v for k, v in lhs.items() if v}
            assert lhs == rho_element(rhs_el, f), (x, y, f)


def test_cross_action_matches_vector_fields():
    for g in homogeneous_generators("sbar", 3):
        for i, r in product(range(-3, 4), (0, 1)):
            a = T(i) if r == 0 else XiT(i)
            out = bracket(g, a, "stilde")
            expected = rho(g, {(i, r): 1})
            got = {(x.index, 0 if x.kind == "T" else 1): c.constant_value() for x, c in out.items()}
            assert got == expected


@pytest.mark.parametrize("flavor", ["s", "sbar", "stilde"])
def test_jacobi_small_range(flavor):
    gens = homogeneous_generators(flavor, 2)
    for x, y, z in product(gens, repeat=3):
        assert super_jacobi(x, y, z, flavor).is_zero(), (x, y, z)


def test_jacobi_examples():
    assert super_jacobi(L(1), L(2), L(-3), "s").is_zero()
    assert super_jacobi(G(1), G(-1), L(0), "s").is_zero()
    assert super_jacobi(G(0), G(0), G(0), "sbar").is_zero()


def test_a_on_sbar_examples():
    assert str(a_on_sbar(T(3), L(-1))) == "L(2)"
    assert str(a_on_sbar(XiT(0), L(5))) == "1/2*G(5)"
    assert a_on_sbar(XiT(2), G(7)).is_zero()
    with pytest.raises(ValueError):
        a_on_sbar(L(1), L(2))


def test_a_compatibility_vanishes():
    ys = homogeneous_generators("sbar", 2)
    As = [T(i) for i in range(-2, 3)] + [XiT(i) for i in range(-2, 3)]
    for y, a, x in product(ys, As, ys):
        assert check_a_compatibility(y, a, x).is_zero(), (y, a, x)


def test_tminus1_expand_examples():
    assert tminus1_expand(1, L(0)) == lie("sbar", (1, L(1)), (-1, L(0)))
    assert tminus1_expand(2, G(-1)) == lie("sbar", (1, G(1)), (-2, G(0)), (1, G(-1)))
    assert tminus1_expand(0, L(5)) == LieElement.basis(L(5))


def test_rel_subalg_examples():
    assert verify_rel_subalg(1, 1, 0, 1, "LL").passed
    assert rel_subalg_rhs(1, 1, 0, 1, "LL") == tminus1_expand(2, L(1))
    assert rel_subalg_rhs(1, 1, 0, 0, "GG") == tminus1_expand(2, L(0)) * -2
    assert rel_subalg_rhs(2, 1, 0, 0, "LL") == -tminus1_expand(3, L(0)) - tminus1_expand(2, L(0))


@pytest.mark.parametrize("kind", ["LL", "LG", "GG"])
def test_rel_subalg_grid(kind):
    for k, l, i, j in product(range(3), range(3), range(-2, 3), range(-2, 3)):
        assert verify_rel_subalg(k, l, i, j, kind).passed


def test_filtration_classes():
    x = tminus1_expand(1, L(10))  # (t-1) t^3 L(7)
    assert a1_mod_a2_class(x) == (as_scalar(1), as_scalar(0))
    assert a1_mod_a2_class(tminus1_expand(2, G(0))) == (as_scalar(0), as_scalar(0))
    for m in range(-4, 5):
        diff = LieElement.basis(L(m)) - LieElement.basis(L(0))
        assert a1_mod_a2_class(diff) == (as_scalar(m), as_scalar(0))
    assert in_a_k(tminus1_expand(3, G(2)), 3) and not in_a_k(tminus1_expand(1, G(2)), 2)
    with pytest.raises(ValueError):
        a1_mod_a2_class(LieElement.basis(L(0)))


def test_a1_mod_a2_is_a_lie_quotient():
    elems = [tminus1_expand(1, g) for g in homogeneous_generators("sbar", 2)]
    elems += [tminus1_expand(2, L(1)), tminus1_expand(1, L(3)) + tminus1_expand(1, G(-2))]
    for u, v in product(elems, elems):
        w = bracket(u, v)
        assert in_a_k(w, 1)
        assert a1_mod_a2_class(w) == class_bracket(a1_mod_a2_class(u), a1_mod_a2_class(v))


gen_strategy = st.builds(
    lambda kind, n: {"L": L, "G": G}[kind](n), st.sampled_from(["L", "G"]), st.integers(-6, 6))
coeffs = st.fractions(min_value=-3, max_value=3, max_denominator=4)


@given(gen_strategy, gen_strategy)
def test_super_skew_symmetry(x, y):
    sign = 1 if x.parity and y.parity else -1
    assert bracket(x, y, "s") == bracket(y, x, "s") * sign


@given(gen_strategy, gen_strategy, gen_strategy, coeffs, coeffs)
def test_bilinearity(x, y, z, a, b):
    lhs = bracket(lie("s", (a, x), (b, y)), LieElement.basis(z, "s"))
    rhs = bracket(x, z, "s") * a + bracket(y, z, "s") * b
    assert lhs == rhs


@given(gen_strategy, gen_strategy, gen_strategy)
def test_jacobi_random_triples(x, y, z):
    assert super_jacobi(x, y, z, "s").is_zero()

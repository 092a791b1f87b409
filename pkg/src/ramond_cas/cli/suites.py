"""Invariant suites run by ``ramond-cas verify``; each yields verification records."""
from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from .. import __version__
from ..coeff import B, CC, H, LAMBDA, format_fraction
from ..liealg import G, L, homogeneous_generators, super_jacobi, verify_rel_subalg
from ..modules.cover import cover_weight_dim
from ..modules.gamma import GammaVector, check_module_axiom, gamma_act, gamma_act_factored
from ..modules.omega import minimal_annihilating_m, omega_apply, omega_bracket_identity
from ..modules.verma import VermaVector, l0_eigenvalue, verma_act, verma_basis, verma_weight_dims
from ..records import Verification, check_zero
from ..twist import verify_centralizer, verify_iota_witness, verify_twist_brackets

SCHEMA = "ramond-cas/1"
SUITES = ("jacobi", "subalg", "twist", "iota", "gamma", "omega", "identity", "verma", "cover")

IDENTITY_POINTS = ((0, 0, 0), (1, 0, -1), (0, 2, 1))
COVER_POINTS = ((Fraction(1, 2), Fraction(1, 3)), (Fraction(0), Fraction(1)),
                (Fraction(1, 3), Fraction(-1, 2)), (Fraction(2), Fraction(3, 4)))
COVER_MAX_K = 12


@dataclass
class Report:
    suite: str
    bound: int
    checks: list = field(default_factory=list)
    meta: dict = field(default_factory=dict)
    seconds: float | None = None

    @property
    def failures(self) -> list:
        return [c for c in self.checks if not c.passed]

    @property
    def passed(self) -> bool:
        return not self.failures

    def as_dict(self, timing: bool = False) -> dict:
        out = {
            "schema": SCHEMA,
            "tool_version": __version__,
            "suite": self.suite,
            "bound": self.bound,
            "summary": {
                "total": len(self.checks),
                "passed": len(self.checks) - len(self.failures),
                "failed": len(self.failures),
            },
            "meta": self.meta,
            "checks": [c.as_dict() for c in self.checks],
        }
        if timing and self.seconds is not None:
            out["timing_seconds"] = round(self.seconds, 3)
        return out


# -- individual suites -------------------------------------------------------------

def _jacobi(bound: int):
    for flavor in ("s", "sbar", "stilde"):
        gens = homogeneous_generators(flavor, bound)
        bad = []
        for x, y, z in product(gens, repeat=3):
            r = super_jacobi(x, y, z, flavor)
            if not r.is_zero():
                bad.append(f"({x},{y},{z}) -> {r}")
        yield Verification(
            f"jacobi/{flavor}", {"flavor": flavor, "bound": bound}, not bad,
            "; ".join(bad[:10]) or None, {"triples": len(gens) ** 3, "failures": len(bad)},
        )


def _subalg(bound: int):
    top = min(bound, 3)
    idx = range(-bound, bound + 1)
    for kind in ("LL", "LG", "GG"):
        for k, l in product(range(top + 1), repeat=2):
            fails = [(i, j) for i, j in product(idx, idx)
                     if not verify_rel_subalg(k, l, i, j, kind).passed]
            yield Verification(
                f"subalg/{kind}/k={k},l={l}", {"kind": kind, "k": k, "l": l, "bound": bound},
                not fails, None if not fails else f"index pairs {fails[:10]}",
            )


def _twist(bound: int):
    nonzero = [m for m in range(-bound, bound + 1) if m]
    for m in nonzero:
        yield verify_centralizer(m)
    for m, n in product(nonzero, nonzero):
        yield verify_twist_brackets(m, n)


def _iota(bound: int):
    for m in range(-bound, bound + 1):
        if m:
            yield verify_iota_witness(m)


def _gamma(bound: int):
    idx = range(-bound, bound + 1)
    gens = homogeneous_generators("stilde", bound)
    vectors = [GammaVector.basis(i, r) for i in idx for r in (0, 1)]
    for x in gens:
        bad = []
        for y in gens:
            for v in vectors:
                r = check_module_axiom(x, y, v)
                if not r.is_zero():
                    bad.append(f"({x},{y},{v}) -> {r}")
        yield Verification(f"gamma/axiom/{x}", {"x": str(x), "bound": bound}, not bad,
                           "; ".join(bad[:10]) or None)
    for x in homogeneous_generators("sbar", bound):
        bad = [str(v) for v in vectors if gamma_act(x, v) != gamma_act_factored(x, v)]
        yield Verification(f"gamma/factored/{x}", {"x": str(x), "bound": bound}, not bad,
                           ", ".join(bad) or None)


def _omega(bound: int):
    rng = range(-min(bound, 3), min(bound, 3) + 1)
    for variant in ("LL", "GL"):
        m_star = minimal_annihilating_m(LAMBDA, B, variant, rng, max_m=6)
        found = m_star is not None
        yield Verification(f"omega/{variant}/minimal_m", {"variant": variant, "max_m": 6}, found,
                           None if found else "no order <= 6 annihilates", {"m_star": m_star})
        if not found:
            continue
        for m in range(m_star, m_star + 3):
            bad = []
            for k, s, i in product(rng, repeat=3):
                for r in (0, 1):
                    out = omega_apply(k, s, m, variant, GammaVector.basis(i, r))
                    if not out.is_zero():
                        bad.append(f"(k={k},s={s},e({i},{r})) -> {out}")
            yield Verification(f"omega/{variant}/m={m}", {"variant": variant, "m": m}, not bad,
                               "; ".join(bad[:10]) or None)


def _identity(bound: int):
    for m in range(min(bound, 2) + 1):
        for j, k, p in IDENTITY_POINTS:
            yield omega_bracket_identity(m, j, k, p)


def _product_oracle(n_max: int) -> list:
    """Coefficients of 2 * prod (1 + q^n) / (1 - q^n)."""
    coeffs = [0] * (n_max + 1)
    coeffs[0] = 2
    for n in range(1, n_max + 1):
        new = coeffs[:]
        for d in range(n, n_max + 1):  # 1 / (1 - q^n)
            new[d] += new[d - n]
        coeffs = new[:]
        for d in range(n_max, n - 1, -1):  # (1 + q^n)
            coeffs[d] += coeffs[d - n]
    return coeffs


def _verma(bound: int):
    depth = 2 * bound
    dims = verma_weight_dims(H, CC, depth)
    oracle = _product_oracle(depth)
    yield Verification("verma/weight_dims", {"depth": depth}, dims == oracle,
                       None if dims == oracle else f"{dims} != {oracle}", {"dims": dims})
    v = VermaVector.cyclic(H, CC)
    for n in range(1, bound + 1):
        for gen in (L(n), G(n)):
            yield check_zero(f"verma/annihilate/{gen}", {"generator": str(gen)}, verma_act(gen, v))
    yield check_zero("verma/G0_square", {}, verma_act(G(0), verma_act(G(0), v)) - v.scale(-H - CC / 24))
    yield check_zero("verma/L1_Lm1", {}, verma_act(L(1), verma_act(L(-1), v)) - v.scale(H * -2))
    for n in range(min(depth, 6) + 1):
        bad = []
        for word in verma_basis(n):
            w = VermaVector({word: 1}, H, CC)
            if verma_act(L(0), w) != w.scale(l0_eigenvalue(H, n)):
                bad.append(str(w))
        yield Verification(f"verma/L0_depth={n}", {"depth": n}, not bad, ", ".join(bad) or None,
                           {"eigenvalue": str(l0_eigenvalue(H, n))})


def _cover(bound: int):
    for lam, b in COVER_POINTS:
        for p in (0, 1):
            history = []
            stable_at = None
            for K in range(1, COVER_MAX_K + 1):
                dim, stable = cover_weight_dim(lam, b, p, K)
                history.append(dim)
                if stable:
                    stable_at = K
                    break
            inputs = {"lambda": format_fraction(lam), "b": format_fraction(b), "offset": p}
            yield Verification(
                f"cover/lambda={inputs['lambda']},b={inputs['b']},p={p}", inputs, stable_at is not None,
                None if stable_at else f"no stabilisation up to K={COVER_MAX_K}: {history}",
                {"dimension": history[-1], "stabilized_at_K": stable_at},
            )


_RUNNERS = {
    "jacobi": _jacobi, "subalg": _subalg, "twist": _twist, "iota": _iota, "gamma": _gamma,
    "omega": _omega, "identity": _identity, "verma": _verma, "cover": _cover,
}

_META = {
    "identity": {"upper_limit": "m+2"},
    "verma": {"orientation": "depth-n weight space has L(0) eigenvalue h - n"},
    "twist": {"convention": "X_0 = Y_0 = 0 in closed forms"},
}


def _run_one(name: str, bound: int) -> Report:
    start = time.perf_counter()
    checks = list(_RUNNERS[name](bound))
    return Report(name, bound, checks, dict(_META.get(name, {})), time.perf_counter() - start)


def thread_cap() -> int:
    try:
        return max(1, int(os.environ.get("RAMOND_CAS_THREADS", "1")))
    except ValueError:
        return 1


def run_suite(name: str, bound: int = 4) -> Report:
    """Run one suite, or ``all`` of them merged in a fixed order."""
    if bound < 1:
        raise ValueError("bound must be positive")
    if name != "all":
        if name not in _RUNNERS:
            raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}, all")
        return _run_one(name, bound)
    start = time.perf_counter()
    workers = thread_cap()
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_run_one, SUITES, [bound] * len(SUITES)))
    else:
        parts = [_run_one(s, bound) for s in SUITES]
    merged = Report("all", bound)
    for part in parts:
        merged.checks.extend(part.checks)
        if part.meta:
            merged.meta[part.suite] = part.meta
    merged.seconds = time.perf_counter() - start
    return merged

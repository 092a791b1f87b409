"""Windowed search for proper submodules of Gamma(lambda, b).

This is evidence on a finite window, never a proof of simplicity: the
generators ``L_m, G_m`` with ``|m| <= depth`` act on the interior
``[lo + depth, hi - depth]`` and components leaving the interior are
discarded.  The closure of each interior basis vector is computed by exact
row reduction; closures that are proper subspaces are reported.  The search
is then repeated on the window grown by ``depth`` on both sides, and the
``stable`` flag records whether the same subspaces came back.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ..coeff import as_fraction, format_fraction
from ..liealg import G, L
from ..linalg import SparseSpan
from .gamma import GammaVector, _gamma_generator
from .window import Window


def _render(vec: dict) -> str:
    parts = []
    for (i, r), c in sorted(vec.items()):
        parts.append(f"{format_fraction(c)}*e({i},{r})")
    return " + ".join(parts).replace("+ -", "- ") if parts else "0"


@dataclass
class SubmoduleReport:
    lam: Fraction
    b: Fraction
    window: Window
    depth: int
    interior_dim: int
    subspaces: list = field(default_factory=list)  # list of reduced spanning sets
    stable: bool = False

    @property
    def found(self) -> bool:
        return bool(self.subspaces)

    def as_dict(self) -> dict:
        return {
            "lambda": format_fraction(self.lam),
            "b": format_fraction(self.b),
            "window": str(self.window),
            "depth": self.depth,
            "interior_dim": self.interior_dim,
            "stable": self.stable,
            "proper_submodules": [
                {"dim": len(basis), "spanning_vectors": [_render(v) for v in basis]}
                for basis in self.subspaces
            ],
        }


def _closure(start: dict, gens: list, interior: Window, lam, b) -> SparseSpan:
    span = SparseSpan()
    span.add(start)
    queue = [start]
    while queue:
        vec = queue.pop()
        gv = GammaVector({k: c for k, c in vec.items()}, lam, b)
        for g in gens:
            image = _gamma_generator(g, gv)
            proj = {k: as_fraction(c) for k, c in image.items() if k[0] in interior}
            if proj and span.add(proj):
                queue.append(proj)
    return span


def _proper_closures(lam, b, w: Window, depth: int) -> tuple[int, list]:
    interior = w.shrink(depth)
    if interior.lo > interior.hi:
        raise ValueError("window too narrow for the requested depth")
    gens = [L(m) for m in range(-depth, depth + 1)] + [G(m) for m in range(-depth, depth + 1)]
    dim = 2 * (interior.hi - interior.lo + 1)
    found: dict = {}
    for key in interior.basis():
        span = _closure({key: Fraction(1)}, gens, interior, lam, b)
        if len(span) < dim:
            basis = span.basis()
            sig = tuple(tuple(sorted(v.items())) for v in basis)
            found.setdefault(sig, basis)
    subspaces = sorted(found.values(), key=lambda basis: (len(basis), str(basis)))
    return dim, subspaces


def _signature(subspaces: list) -> set:
    return {tuple(tuple(sorted(v.items())) for v in basis) for basis in subspaces}


def submodule_search(lam, b, w: Window, depth: int) -> SubmoduleReport:
    """Proper invariant subspaces of the interior of ``w``; rational parameters only."""
    lam, b = as_fraction(lam), as_fraction(b)
    if depth < 1:
        raise ValueError("depth must be at least 1")
    dim, subspaces = _proper_closures(lam, b, w, depth)
    _, grown = _proper_closures(lam, b, w.grow(depth), depth)
    stable = _signature(subspaces) == _signature(grown)
    return SubmoduleReport(lam, b, w, depth, dim, subspaces, stable)


def exceptional_sweep(lam, b_values, w: Window, depth: int) -> list:
    """Run :func:`submodule_search` over a grid of b values; rows with findings are flagged."""
    rows = []
    for b in b_values:
        rep = submodule_search(lam, b, w, depth)
        row = rep.as_dict()
        row["exceptional"] = rep.found
        rows.append(row)
    return rows

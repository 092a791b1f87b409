"""Exact matrices of algebra elements on a truncated support window of Gamma(lambda, b)."""
from __future__ import annotations

from dataclasses import dataclass, field

from ..coeff import ZERO, Scalar, ScalarLike, as_scalar
from ..env import EnvElement
from ..liealg import Generator, LieElement
from .gamma import GammaVector, gamma_act


@dataclass(frozen=True)
class Window:
    lo: int
    hi: int

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"empty window [{self.lo}, {self.hi}]")

    def basis(self) -> list:
        return [(i, r) for i in range(self.lo, self.hi + 1) for r in (0, 1)]

    def shrink(self, d: int) -> "Window":
        return Window(self.lo + d, self.hi - d)

    def grow(self, d: int) -> "Window":
        return Window(self.lo - d, self.hi + d)

    def __contains__(self, i: int) -> bool:
        return self.lo <= i <= self.hi

    def __str__(self):
        return f"{self.lo}..{self.hi}"

    @classmethod
    def parse(cls, text: str) -> "Window":
        lo, hi = text.split("..")
        return cls(int(lo), int(hi))


@dataclass
class WindowedOperator:
    """Banded matrix ``entries[target][source]`` over the basis of ``window``."""

    window: Window
    shift: int
    entries: list
    spill: int = 0
    basis: list = field(default_factory=list)

    def __post_init__(self):
        if not self.basis:
            self.basis = self.window.basis()

    @property
    def size(self) -> int:
        return len(self.basis)

    def entry(self, target: tuple, source: tuple) -> Scalar:
        return self.entries[self.basis.index(target)][self.basis.index(source)]

    def is_banded(self) -> bool:
        for t, row in zip(self.basis, self.entries):
            for s, x in zip(self.basis, row):
                if x and t[0] - s[0] != self.shift:
                    return False
        return True

    def __matmul__(self, other: "WindowedOperator") -> "WindowedOperator":
        if self.window != other.window:
            raise ValueError("window mismatch")
        n = self.size
        prod = [[ZERO] * n for _ in range(n)]
        for a in range(n):
            row = self.entries[a]
            for k in range(n):
                x = row[k]
                if not x:
                    continue
                other_row = other.entries[k]
                for b in range(n):
                    y = other_row[b]
                    if y:
                        prod[a][b] = prod[a][b] + x * y
        return WindowedOperator(self.window, self.shift + other.shift, prod, 0, list(self.basis))

    def columns_within(self, inner: Window) -> list:
        return [k for k, (i, _r) in enumerate(self.basis) if i in inner]

    def agrees_on(self, other: "WindowedOperator", inner: Window) -> bool:
        """Compare the columns whose source offset lies in ``inner``."""
        cols = self.columns_within(inner)
        return all(self.entries[a][k] == other.entries[a][k] for a in range(self.size) for k in cols)

    def evaluate(self, assignment) -> "WindowedOperator":
        return WindowedOperator(
            self.window, self.shift,
            [[x.evaluate(assignment) for x in row] for row in self.entries],
            self.spill, list(self.basis),
        )


def weight_shift(g) -> int:
    """Common ad L_0 weight of a homogeneous-weight element; raises on mixed weights."""
    if isinstance(g, Generator):
        return g.index
    if isinstance(g, LieElement):
        shifts = {x.index for x in g.generators()}
    elif isinstance(g, EnvElement):
        shifts = {sum(x.index for x in w) for w in g.words()}
    else:
        raise TypeError(f"cannot take the weight of {g!r}")
    if len(shifts) > 1:
        raise ValueError(f"mixed weight shifts {sorted(shifts)}")
    return shifts.pop() if shifts else 0


def window_matrix(g, lam: ScalarLike, b: ScalarLike, w: Window) -> WindowedOperator:
    """Matrix of ``g`` on Gamma(lambda, b) restricted to offsets in ``w``.

    Images landing outside ``w`` are dropped and counted in ``spill``.
    """
    shift = weight_shift(g)
    lam, b = as_scalar(lam), as_scalar(b)
    basis = w.basis()
    index = {k: n for n, k in enumerate(basis)}
    n = len(basis)
    entries = [[ZERO] * n for _ in range(n)]
    spill = 0
    for col, (i, r) in enumerate(basis):
        image = gamma_act(g, GammaVector.basis(i, r, lam, b))
        for key, c in image.items():
            if key in index:
                entries[index[key]][col] = c
            else:
                spill += 1
    return WindowedOperator(w, shift, entries, spill, basis)

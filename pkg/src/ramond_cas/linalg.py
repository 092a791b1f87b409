"""Exact row reduction over the rationals."""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .coeff import Scalar, as_fraction


def _to_fraction_rows(rows) -> list:
    return [[as_fraction(x) if isinstance(x, Scalar) else Fraction(x) for x in row] for row in rows]


def rref(rows: Sequence[Sequence], ncols: int | None = None) -> tuple[list, list]:
    """Reduced row echelon form of ``rows``; returns ``(nonzero_rows, pivot_columns)``."""
    m = _to_fraction_rows(rows)
    if ncols is None:
        ncols = len(m[0]) if m else 0
    pivots = []
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][col]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = 1 / m[r][col]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col]:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Sequence[Sequence], ncols: int | None = None) -> int:
    return len(rref(rows, ncols)[1])


def nullspace(rows: Sequence[Sequence], ncols: int) -> list:
    """Basis of ``{x : rows @ x = 0}``."""
    red, pivots = rref(rows, ncols) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(red, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


class SparseSpan:
    """Incrementally maintained row-reduced basis of a span of sparse vectors.

    Vectors are dicts ``{key: Fraction}``; keys are compared with ``order``.
    """

    def __init__(self, order=None):
        self._order = order or (lambda k: k)
        self._rows: dict = {}  # pivot key -> reduced row

    def __len__(self):
        return len(self._rows)

    def reduce(self, vec: dict) -> dict:
        v = {k: Fraction(c) for k, c in vec.items() if c}
        for piv, row in self._rows.items():
            c = v.get(piv)
            if c:
                for k, x in row.items():
                    y = v.get(k, 0) - c * x
                    if y:
                        v[k] = y
                    else:
                        v.pop(k, None)
        return v

    def add(self, vec: dict) -> bool:
        """Insert ``vec``; returns True when it enlarged the span."""
        v = self.reduce(vec)
        if not v:
            return False
        piv = min(v, key=self._order)
        inv = 1 / v[piv]
        v = {k: x * inv for k, x in v.items()}
        for p, row in self._rows.items():
            c = row.get(piv)
            if c:
                for k, x in v.items():
                    y = row.get(k, 0) - c * x
                    if y:
                        row[k] = y
                    else:
                        row.pop(k, None)
        self._rows[piv] = v
        return True

    def contains(self, vec: dict) -> bool:
        return not self.reduce(vec)

    def basis(self) -> list:
        """Reduced basis sorted by pivot."""
        return [dict(sorted(self._rows[p].items(), key=lambda kv: self._order(kv[0])))
                for p in sorted(self._rows, key=self._order)]

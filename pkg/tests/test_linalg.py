from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from ramond_cas.linalg import SparseSpan, nullspace, rank, rref

entries = st.integers(-3, 3).map(Fraction)


@st.composite
def matrices(draw):
    n = draw(st.integers(1, 4))
    m = draw(st.integers(1, 5))
    return [[draw(entries) for _ in range(m)] for _ in range(n)], m


def test_rref_example():
    rows, pivots = rref([[2, 4, 0], [1, 2, 1]], 3)
    assert pivots == [0, 2]
    assert rows == [[1, 2, 0], [0, 0, 1]]


@given(matrices())
def test_rank_nullity(mat):
    rows, m = mat
    ns = nullspace(rows, m)
    assert rank(rows, m) + len(ns) == m
    for v in ns:
        assert all(sum(a * b for a, b in zip(r, v)) == 0 for r in rows)


@given(matrices())
def test_sparse_span_matches_rank(mat):
    rows, m = mat
    span = SparseSpan()
    for r in rows:
        span.add({j: x for j, x in enumerate(r) if x})
    assert len(span) == rank(rows, m)
    for r in rows:
        assert span.contains({j: x for j, x in enumerate(r) if x})

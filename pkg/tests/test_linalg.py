from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from nilorbits.linalg import (
    DimensionError, RationalMatrix, inverse, nullspace, rank, solve,
)
from nilorbits.oracle import jordan_block

small = st.integers(-4, 4)


@st.composite
def matrices(draw, max_dim=4):
    r = draw(st.integers(1, max_dim))
    c = draw(st.integers(1, max_dim))
    return RationalMatrix([[draw(small) for _ in range(c)] for _ in range(r)], c)


def test_rank_examples():
    assert rank(RationalMatrix.zeros(3, 3)) == 0
    assert rank(RationalMatrix.identity(4)) == 4
    assert rank(jordan_block(3)) == 2


def test_nullspace_examples():
    assert nullspace(RationalMatrix.identity(3)) == []
    assert len(nullspace(RationalMatrix.zeros(2, 3))) == 3
    assert nullspace(RationalMatrix([[0, 1], [0, 0]])) == [[1, 0]]


def test_floats_are_rejected():
    with pytest.raises(TypeError):
        RationalMatrix([[0.5]])


def test_shape_errors():
    with pytest.raises(DimensionError):
        RationalMatrix.identity(2) @ RationalMatrix.identity(3)
    with pytest.raises(DimensionError):
        RationalMatrix.identity(2) + RationalMatrix.zeros(2, 3)


def test_inverse_and_solve():
    m = RationalMatrix([[2, 1], [1, 1]])
    assert m @ inverse(m) == RationalMatrix.identity(2)
    assert solve(m, [3, 2]) == [1, 1]
    assert solve(RationalMatrix([[1, 1], [1, 1]]), [1, 2]) is None
    assert inverse(m)[0, 1] == Fraction(-1)


@given(matrices())
def test_rank_nullity(m):
    basis = nullspace(m)
    assert rank(m) + len(basis) == m.ncols
    for v in basis:
        assert all(x == 0 for x in m.apply(v))


@given(matrices(), matrices(), matrices())
def test_product_associativity(a, b, c):
    if a.ncols == b.nrows and b.ncols == c.nrows:
        assert (a @ b) @ c == a @ (b @ c)
    assert a.T().T() == a

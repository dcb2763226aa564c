import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from strategies import ring_matrix
from vlk.laurent import LPoly1, LPoly2
from vlk.matrix import ORACLE_MAX_SIZE, RingMatrix, determinant, determinant_oracle

X = LPoly2.gen("x")
Y = LPoly2.gen("y")
ONE = LPoly2.one()


def test_two_by_two():
    m = RingMatrix([[ONE - X, -Y], [-X, ONE]])
    assert determinant(m) == ONE - X - X * Y


def test_identity_and_zero_size():
    assert determinant(RingMatrix.identity(5)) == ONE
    assert determinant(RingMatrix([])) == ONE
    assert determinant_oracle(RingMatrix([])) == ONE


def test_singular_matrix():
    row = [X, Y, ONE]
    assert determinant(RingMatrix([row, row, [ONE, ONE, ONE]])).is_zero()


def test_works_over_one_variable_ring():
    t = LPoly1.gen("t")
    m = RingMatrix([[t, LPoly1.one()], [LPoly1.one(), t]], LPoly1)
    assert determinant(m) == t * t - LPoly1.one()


@settings(max_examples=200, deadline=None)
@given(ring_matrix(max_size=5))
def test_bareiss_matches_oracle(m):
    assert determinant(m) == determinant_oracle(m)


@settings(max_examples=60, deadline=None)
@given(ring_matrix(min_size=2, max_size=4), st.data())
def test_row_swap_negates(m, data):
    n = m.size
    i = data.draw(st.integers(0, n - 1))
    j = data.draw(st.integers(0, n - 1).filter(lambda k: k != i))
    assert determinant(m.swap_rows(i, j)) == -determinant(m)


@settings(max_examples=60, deadline=None)
@given(ring_matrix(max_size=4))
def test_transpose_invariant(m):
    assert determinant(m.transpose()) == determinant(m)


def test_oracle_size_limit():
    with pytest.raises(ValueError):
        determinant_oracle(RingMatrix.identity(ORACLE_MAX_SIZE + 1))


def test_non_square_rejected():
    with pytest.raises(ValueError):
        RingMatrix([[ONE, ONE]])

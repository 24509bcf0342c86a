from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from resgraph import linalg

square = st.integers(1, 5).flatmap(
    lambda n: st.lists(st.lists(st.integers(-6, 6), min_size=n, max_size=n), min_size=n, max_size=n))


def test_leading_minors_of_chain():
    assert linalg.leading_minors([[-1, 1, 0], [1, -2, 1], [0, 1, -2]]) == [-1, 1, -1]


def test_leading_minors_stop_at_zero():
    assert linalg.leading_minors([[0, 1], [1, 0]]) == [0, None]


def test_solve_small_system():
    assert linalg.solve([[-1, 1, 0], [1, -2, 1], [0, 1, -2]], [-1, 0, 0]) == [3, 2, 1]


def test_solve_singular():
    with pytest.raises(ValueError):
        linalg.solve([[-2, 2], [2, -2]], [1, 1])


@settings(max_examples=200, deadline=None)
@given(square)
def test_determinant_matches_sympy(m):
    assert linalg.determinant(m) == sympy.Matrix(m).det()


@settings(max_examples=200, deadline=None)
@given(square)
def test_leading_minors_match_sympy(m):
    minors = linalg.leading_minors(m)
    for k, d in enumerate(minors, start=1):
        if d is None:
            break
        assert d == sympy.Matrix(m)[:k, :k].det()


@settings(max_examples=200, deadline=None)
@given(square, st.data())
def test_solve_matches_sympy(m, data):
    rhs = data.draw(st.lists(st.integers(-9, 9), min_size=len(m), max_size=len(m)))
    if sympy.Matrix(m).det() == 0:
        with pytest.raises(ValueError):
            linalg.solve(m, rhs)
        return
    x = linalg.solve(m, rhs)
    expected = sympy.Matrix(m).LUsolve(sympy.Matrix(rhs))
    assert x == [Fraction(int(e.p), int(e.q)) for e in expected]
    assert linalg.matvec(m, x) == rhs

from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from vreduced.linalg import solve, solve_pinned

rationals = st.fractions(max_denominator=7).filter(lambda x: abs(x) < 20)


@st.composite
def systems(draw):
    n = draw(st.integers(1, 5))
    m = draw(st.lists(st.lists(rationals, min_size=n, max_size=n), min_size=n, max_size=n))
    b = draw(st.lists(rationals, min_size=n, max_size=n))
    return m, b


@given(systems())
def test_solve_matches_sympy(system):
    m, b = system
    sm = sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in row] for row in m])
    if sm.det() == 0:
        with pytest.raises(ValueError):
            solve(m, b)
        return
    sb = sympy.Matrix([sympy.Rational(x.numerator, x.denominator) for x in b])
    expected = sm.LUsolve(sb)
    got = solve(m, b)
    assert [Fraction(int(e.p), int(e.q)) for e in expected] == got


def test_solve_small():
    assert solve([[2, 1], [1, 3]], [3, 5]) == [Fraction(4, 5), Fraction(7, 5)]
    assert solve([], []) == []


def test_solve_pinned_harmonic_midpoint():
    # path a - b - c, ends pinned
    adj = [[0, 1, 0], [1, 0, 1], [0, 1, 0]]
    assert solve_pinned(adj, {0: 0, 2: 1}) == [0, Fraction(1, 2), 1]


def test_solve_pinned_needs_a_pin():
    with pytest.raises(ValueError):
        solve_pinned([[0]], {})

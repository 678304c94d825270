import pytest
from hypothesis import given
from hypothesis import strategies as st

from pqwhitney.basics import (
    NegativeArgument,
    binomial,
    bracket,
    bracket_base,
    bracket_base_factorial,
    falling_factorial,
)
from pqwhitney.laurent import ONE, P, Q, ZERO, LaurentPoly

Q_OVER_P = LaurentPoly.monomial(-1, 1)


def test_bracket_examples():
    assert bracket(0) == ZERO
    assert bracket(1) == ONE
    assert bracket(3) == P**2 + P * Q + Q**2
    with pytest.raises(NegativeArgument):
        bracket(-1)


def test_bracket_is_quotient_of_differences():
    for t in range(12):
        assert bracket(t) * (P - Q) == P**t - Q**t


def test_bracket_at_one():
    for t in range(51):
        assert bracket(t).eval_int(1, 1) == t


@pytest.mark.parametrize("t", range(1, 20))
def test_bracket_from_q_over_p_base(t):
    assert bracket(t) == bracket_base(t, (-1, 1)).mono_mul(t - 1, 0)


def test_bracket_base_examples():
    assert bracket_base(0, (-1, 1)) == ZERO
    assert bracket_base(0, (4, 4)) == ZERO
    assert bracket_base(3, (-1, 1)) == ONE + Q_OVER_P + Q_OVER_P**2
    for m in (1, 2, 5):
        assert bracket_base(2, (-m, m)) == ONE + Q_OVER_P**m
    assert bracket_base(4, (0, 0)) == 4


def test_bracket_base_factorial_examples():
    assert bracket_base_factorial(0, (-1, 1)) == ONE
    assert bracket_base_factorial(0, (7, -2)) == ONE
    assert bracket_base_factorial(2, (-1, 1)) == ONE + Q_OVER_P
    expected = (ONE + Q_OVER_P) * (ONE + Q_OVER_P + Q_OVER_P**2)
    assert bracket_base_factorial(3, (-1, 1)) == expected
    assert expected == ONE + 2 * Q_OVER_P + 2 * Q_OVER_P**2 + Q_OVER_P**3


def test_falling_factorial_examples():
    assert falling_factorial(3, 1, 0) == ONE
    assert falling_factorial(-5, 2, 0) == ONE
    assert falling_factorial(3, 1, 2) == (P**2 + P * Q + Q**2) * (P + Q)
    with pytest.raises(NegativeArgument):
        falling_factorial(2, 3, 2)
    # a zero bracket is allowed and kills the product
    assert falling_factorial(2, 1, 3) == ZERO


@given(st.integers(0, 30), st.integers(1, 4), st.integers(0, 8))
def test_falling_factorial_at_one(t, m, n):
    if t - (n - 1) * m < 0 and n > 0:
        with pytest.raises(NegativeArgument):
            falling_factorial(t, m, n)
        return
    expected = 1
    for j in range(n):
        expected *= t - j * m
    assert falling_factorial(t, m, n).eval_int(1, 1) == expected


def test_binomial_examples():
    assert binomial(0, 0) == 1
    assert binomial(3, 1) == 3
    assert binomial(5, 7) == 0
    assert binomial(5, -1) == 0


def test_pascal_rule():
    for n in range(1, 31):
        for k in range(1, n + 1):
            assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)

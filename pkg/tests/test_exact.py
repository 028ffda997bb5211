from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from detlab.exact import (ExactDivisionError, QPoly, binomial, exact_div, format_qpoly, pochhammer,
                          q_binomial, q_factorial, q_int, superfactorial)


@pytest.mark.parametrize("a,b,expected", [(4, 2, 6), (3, -1, 0), (2, 5, 0), (0, 0, 1), (7, 7, 1)])
def test_binomial_examples(a, b, expected):
    assert binomial(a, b) == expected


def test_binomial_rejects_negative_top():
    with pytest.raises(ValueError):
        binomial(-1, 0)


@given(st.integers(1, 60), st.integers(-3, 63))
def test_pascal(a, b):
    assert binomial(a, b) == binomial(a - 1, b) + binomial(a - 1, b - 1)


@pytest.mark.parametrize("m,expected", [(0, 1), (1, 1), (3, 12), (4, 288)])
def test_superfactorial(m, expected):
    assert superfactorial(m) == expected


def test_superfactorial_ratio():
    from math import factorial
    for m in range(1, 15):
        assert superfactorial(m) // superfactorial(m - 1) == factorial(m)


def test_pochhammer_examples():
    assert pochhammer(2, 3) == 24
    assert pochhammer(Fraction(7, 3), 0) == 1
    assert pochhammer(5, -2) == Fraction(1, 12)


def test_pochhammer_zero_factor():
    with pytest.raises(ZeroDivisionError):
        pochhammer(1, -1)


@given(st.fractions(max_denominator=7).filter(lambda x: x.denominator != 1), st.integers(0, 8))
def test_pochhammer_negative_law(x, m):
    assert pochhammer(x, -m) * pochhammer(x - m, m) == 1


@given(st.integers(-5, 5), st.integers(0, 6), st.integers(0, 6))
def test_pochhammer_addition(x, j, k):
    # (x)_{j+k} = (x)_j (x+j)_k
    assert pochhammer(x, j + k) == pochhammer(x, j) * pochhammer(x + j, k)


def test_exact_div():
    assert exact_div(12, 4) == 3
    assert exact_div(Fraction(1, 2), Fraction(1, 4)) == 2
    with pytest.raises(ExactDivisionError):
        exact_div(7, 2)
    with pytest.raises(ZeroDivisionError):
        exact_div(1, 0)


def test_q_numbers():
    q = QPoly.q()
    assert q_int(0) == 0
    assert q_int(3) == 1 + q + q ** 2
    assert q_binomial(2, 1) == 1 + q
    assert format_qpoly(q_binomial(4, 2)) == "1 + q + 2*q^2 + q^3 + q^4"
    assert q_binomial(3, 5) == 0
    assert q_binomial(3, -1) == 0
    assert q_factorial(3) == (1 + q) * (1 + q + q ** 2)


def _q_pascal(n, k, memo={}):
    # oracle: [n,k] = [n-1,k-1] + q^k [n-1,k]
    if k < 0 or k > n:
        return QPoly()
    if k == 0 or k == n:
        return QPoly.constant(1)
    key = (n, k)
    if key not in memo:
        memo[key] = _q_pascal(n - 1, k - 1) + QPoly.monomial(k) * _q_pascal(n - 1, k)
    return memo[key]


@pytest.mark.parametrize("n", range(0, 11))
def test_q_binomial_vs_q_pascal(n):
    for k in range(-1, n + 2):
        assert q_binomial(n, k) == _q_pascal(n, k)


@pytest.mark.parametrize("n", range(0, 10))
def test_q_binomial_properties(n):
    for k in range(n + 1):
        p = q_binomial(n, k)
        assert p(1) == binomial(n, k)
        c = [p.coefficient(e) for e in range(0, k * (n - k) + 1)]
        assert c == c[::-1]  # palindromic
        assert p == q_binomial(n, n - k)


def test_qpoly_arithmetic_and_division():
    q = QPoly.q()
    a = 1 + 2 * q - q ** 3
    b = q - 1
    assert exact_div(a * b, b) == a
    quo, rem = (a * b + 3).divmod(b)
    assert quo == a and rem == 3
    with pytest.raises(ExactDivisionError):
        exact_div(a, b)
    assert (q ** -2) * q ** 2 == 1
    assert QPoly.constant(5) == 5 and hash(QPoly.constant(5)) == hash(5)
    assert (q ** 2 + 1).subs_power(3) == q ** 6 + 1
    assert (2 * q + Fraction(1, 2))(Fraction(1, 2)) == Fraction(3, 2)


@given(st.lists(st.integers(-9, 9), max_size=6), st.lists(st.integers(-9, 9), min_size=1, max_size=5))
def test_qpoly_division_roundtrip(ca, cb):
    a, b = QPoly(ca), QPoly(cb)
    if b.is_zero():
        return
    assert exact_div(a * b, b) == a

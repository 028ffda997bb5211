from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from detlab.determinants import det_bareiss
from detlab.families import build
from detlab.closed_forms import rhs
from detlab.guesser import NoFit, ProductFormula, guess_product_form, parse_sequence, roundness


def c2(n):
    return n * (n - 1) // 2


def test_powers_of_two():
    seq = [2 ** c2(n) for n in range(1, 11)]
    f = guess_product_form(seq)
    assert f and f.values(10) == seq
    assert f.rho(5) == 2
    assert f(11) == 2 ** c2(11)


def test_constant_sequence():
    f = guess_product_form([1] * 6)
    assert f.values(9) == [1] * 9
    assert f.degree == 0


def test_K_n_from_determinants():
    seq = [det_bareiss(build("I11", n)) for n in range(1, 9)]
    f = guess_product_form(seq)
    assert f.values(8) == seq
    assert f(9) == rhs("I11", 9)


def test_no_fit():
    res = guess_product_form([2, 3, 5, 7, 11, 13, 17, 19, 23, 29])
    assert isinstance(res, NoFit) and not res
    assert "degree" in res.reason


def test_input_validation():
    with pytest.raises(ValueError):
        guess_product_form([1, 2, 3])
    with pytest.raises(ValueError):
        guess_product_form([1, 2, 0, 4, 5, 6])


def test_line_roundtrip():
    f = guess_product_form([factorial(n) for n in range(1, 9)])
    g = ProductFormula.from_line(f.to_line())
    assert g == f
    with pytest.raises(ValueError):
        ProductFormula.from_line("I01 | ring=integer")


def test_canonical_output():
    f = guess_product_form([factorial(2 * n) for n in range(1, 10)])
    assert f.den[-1] > 0
    assert all(isinstance(c, int) for c in f.num + f.den)


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 5), st.integers(1, 5), st.integers(1, 4), st.integers(1, 4))
def test_random_hypergeometric_roundtrip(a, b, c, d):
    # r(m) = prod_(t<m) (a t + b)/(c t + d) with first = 1, ratio = 1
    f0 = ProductFormula(Fraction(1), Fraction(1), (b, a), (d, c))
    seq = f0.values(9)
    f = guess_product_form(seq)
    assert f and f.values(12) == f0.values(12)


def test_roundness():
    assert roundness([2 ** c2(n) for n in range(1, 10)], 100).round
    K = [det_bareiss(build("I11", n)) for n in range(1, 9)]
    assert roundness(K, 50).round
    rep = roundness([2, 3, 5, 7, 11, 13], 10)
    assert not rep.round and rep.largest_prime == [2, 3, 5, 7, 11, 13]
    assert roundness([Fraction(5, 3)], 5).round


def test_parse_sequence():
    assert parse_sequence("1\n# c\n 2/3 \n\n4  # four\n") == [1, Fraction(2, 3), 4]

from math import factorial

import pytest

from detlab.ct_integral import (SizeGuardError, ct_entry_representation_check, dn_constant_term, dyson_ct,
                                general_family_survey, moment_integral, selberg_like, v2_coefficient,
                                v2_coefficient_check)
from detlab.exact import superfactorial
from detlab.laurent import MultiLaurent, vandermonde, x_names


@pytest.mark.parametrize("n,alpha,expected", [(2, 1, 2), (3, 1, 6), (1, 3, 1), (2, 2, 6)])
def test_dyson_examples(n, alpha, expected):
    assert dyson_ct(n, alpha) == expected


def test_dyson_equal_parameter():
    assert [dyson_ct(n, 1) for n in range(1, 6)] == [factorial(n) for n in range(1, 6)]
    # multinomial (n alpha)! / alpha!^n
    assert [dyson_ct(n, 2) for n in range(1, 5)] == [factorial(2 * n) // 2 ** n for n in range(1, 5)]


def test_dyson_guard():
    with pytest.raises(SizeGuardError):
        dyson_ct(6, 1)


def test_v2():
    assert [v2_coefficient(n) for n in range(1, 4)] == [1, -2, -6]
    for n in range(1, 7):
        assert v2_coefficient_check(n) == (-1) ** (n * (n - 1) // 2) * factorial(n)


@pytest.mark.parametrize("i,j,weight,expected", [(2, 1, 1, 3), (1, 1, 2, 13), (0, 0, 1, 1), (0, 0, 2, 1),
                                                 (0, 0, 4, 1), (1, 1, 4, 33)])
def test_entry_representation(i, j, weight, expected):
    rep = ct_entry_representation_check(i, j, weight)
    assert rep["ok"] and rep["expected"] == expected


def test_entry_representation_grid():
    for w in (1, 2, 4):
        assert all(ct_entry_representation_check(i, j, w)["ok"] for i in range(5) for j in range(5))


def test_dn_constant_term():
    assert all(dn_constant_term(n) == 1 for n in range(1, 5))


def test_moment_integral():
    names = x_names(1)
    assert moment_integral(MultiLaurent.constant(1, names=names)) == 1
    v = vandermonde(2)
    assert moment_integral(v * v) == 2
    assert moment_integral(MultiLaurent.var("x0", names, 3)) == 6
    assert moment_integral(MultiLaurent.var("x0", names, 1), alpha=2) == 6
    with pytest.raises(ValueError):
        moment_integral(MultiLaurent.var("x0", names, -1))


def test_selberg_like():
    assert selberg_like(1, 0, 1) == 1
    assert selberg_like(2, 0, 1) == 2
    assert selberg_like(3, 0, 1) == 24
    for n in range(1, 6):
        assert selberg_like(n, 0, 1) == superfactorial(n) * superfactorial(n - 1)
    assert selberg_like(3, 0, 0) == 1
    with pytest.raises(SizeGuardError):
        selberg_like(4, 0, 2)


def test_survey_shape():
    s = general_family_survey(max_n=3, max_param=1)
    assert s["dyson"][(3, 1)] == 6
    assert s["binomial"][(2, 0, 0)] == 1
    assert (3, 0, 1) in s["moment"]

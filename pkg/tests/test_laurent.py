from itertools import permutations

import pytest
from hypothesis import given, strategies as st

from detlab.exact import QPoly
from detlab.laurent import MultiLaurent, coefficient, ct, ct_all, format_multi, vandermonde, x_names

N2 = x_names(2)
N3 = x_names(3)


def X(i, names=N2, power=1):
    return MultiLaurent.var(names[i], names, power)


def test_ct_examples():
    x0, x1 = X(0), X(1)
    p = ct(x0 + 2 + X(0, power=-1) * x1, 0)
    assert p.names == ("x1",)
    assert p == 2
    assert ct_all(ct((1 + x0) * (1 + X(0, power=-1)), 0)) == 2
    assert ct(x1, 0) == MultiLaurent.var("x1", ("x1",))


def test_ct_all_examples():
    x0, x1 = X(0), X(1)
    assert ct_all(MultiLaurent.constant(7, names=N2)) == 7
    assert ct_all((1 - x0 * X(1, power=-1)) * (1 - x1 * X(0, power=-1))) == 2
    assert ct_all(x0 * x1) == 0


def test_vandermonde():
    assert vandermonde(1) == 1
    assert vandermonde(2) == X(1) - X(0)
    assert len(vandermonde(3)) == 6
    assert len(vandermonde(4)) == 24


@pytest.mark.parametrize("n", range(1, 6))
def test_vandermonde_vs_product(n):
    names = x_names(n)
    prod = MultiLaurent.constant(1, names=names)
    for i in range(n):
        for j in range(i + 1, n):
            prod = prod * (X(j, names) - X(i, names))
    assert vandermonde(n) == prod


def test_coefficient():
    v = vandermonde(2)
    assert coefficient(v * v, (1, 1)) == -2
    assert coefficient(MultiLaurent({}, N2), (1, 1)) == 0
    assert coefficient(X(0, N3) * X(1, N3) * X(2, N3), (1, 1, 1)) == 1


small = st.dictionaries(st.tuples(st.integers(-2, 2), st.integers(-2, 2)), st.integers(-4, 4), max_size=5)


@given(small, small)
def test_ct_commutes_and_is_linear(a, b):
    p, r = MultiLaurent(a, N2), MultiLaurent(b, N2)
    assert ct(ct(p, 0), 0) == ct(ct(p, 1), 0)
    assert ct(p + 3 * r, 0) == ct(p, 0) + 3 * ct(r, 0)


@given(small, small)
def test_ring_laws(a, b):
    p, r = MultiLaurent(a, N2), MultiLaurent(b, N2)
    assert p * r == r * p
    assert (p + r) * (p - r) == p * p - r * r
    if r:
        assert (p * r).exact_div(r) == p


def test_from_qpoly_and_format():
    q = QPoly.q()
    m = MultiLaurent.from_qpoly(1 + 2 * q ** 2, ("q", "z"))
    assert m.evaluate({"q": 2, "z": 5}) == 9
    assert format_multi(X(1) - X(0)) in ("x1 - x0", "-x0 + x1")


def test_vandermonde_as_determinant_expansion():
    # V(x) = sum over permutations of sign * prod x_i^(sigma i)
    n = 3
    acc = {}
    for perm in permutations(range(n)):
        inv = sum(perm[i] > perm[j] for i in range(n) for j in range(i + 1, n))
        acc[tuple(perm)] = (-1) ** inv
    assert vandermonde(n) == MultiLaurent(acc, x_names(n))

import pytest

from detlab.catalog import CatalogError, format_catalog, format_entry, parse_catalog, parse_entry, parse_record
from detlab.determinants import det_bareiss
from detlab.exact import QPoly, q_binomial
from detlab.families import (ParameterError, build, default_grid, delannoy, entry_function, list_identities,
                             load_registry, lookup, point_key)
from importlib import resources


def test_catalog_roundtrip():
    text = resources.files("detlab").joinpath("data/identities.catalog").read_text()
    records = parse_catalog(text)
    again = parse_catalog(format_catalog(records))
    assert again == records


@pytest.mark.parametrize("text", [
    "binom(2*i+2*a, j+b)",
    "qbinom(r*i+x, j+y) * q^(i*y-i*x)",
    "sum[k=0..min(2*i,2*j)] binom(2*i, k) * binom(2*j, k) * 4^k",
    "factorial(i+j)",
    "dyson(n, 1)",
])
def test_entry_roundtrip(text):
    e = parse_entry(text)
    assert parse_entry(format_entry(e)) == e


def test_bad_records():
    with pytest.raises(CatalogError):
        parse_record("I99 | ring=integer | n=1..3")  # no entry
    with pytest.raises(CatalogError):
        parse_entry("binom(i")


def test_registry_census():
    ids = {r.id for r in list_identities()}
    assert {f"I{k:02d}" for k in range(1, 30)} <= ids
    assert {p for p, _, _ in lookup("I05").params} == {"mu"}
    assert {p for p, _, _ in lookup("I04").params} == {"a", "b", "c"}
    with pytest.raises(KeyError):
        lookup("I99")


def test_build_examples():
    assert build("I03", 2, {"r": 3}).tolist() == [[1, 0], [1, 3]]
    assert build("I06", 3).tolist() == [[1, 1, 1], [1, 2, 3], [1, 3, 6]]
    assert build("I11", 2).tolist() == [[1, 1], [1, 13]]
    assert build("I12", 2).tolist() == [[1, 1], [1, 33]]
    assert build("I15", 2).tolist() == [[1, 1], [1, 136]]


def test_symmetry():
    assert build("I06", 6).is_symmetric()
    assert build("I04", params={"a": 2, "b": 2, "c": 5}).is_symmetric()
    assert build("I11", 5).is_symmetric()
    assert not build("I01", 3, {"a": 0, "b": 0}).is_symmetric()


def test_i25_differs_from_i11_by_summation_range():
    # (1,2): min(i,j) stops at k=1, min(2i,2j) adds C(2,2) C(4,2) 2^2 = 24
    assert build("I25", 3)[1, 2] == 17
    assert build("I11", 3)[1, 2] == 17 + 24


def test_q_families_reduce_at_q_equal_1():
    M = build("I16", 4, {"r": 2, "x": 1, "y": 1})
    N = build("I02", 4, {"r": 2, "x": 1, "y": 1})
    assert [[e(1) for e in row] for row in M.rows] == N.tolist()
    S = build("I18", 4)
    assert S[2, 3](1) == sum(q_binomial(2, k)(1) * q_binomial(3, k)(1) * 2 ** (k + 1) for k in range(3))


def test_multivariate_family():
    M = build("I24", 2)
    e1 = M.rows[0][0].__class__.var("e1", ("e1", "e2"))
    e2 = M.rows[0][0].__class__.var("e2", ("e1", "e2"))
    assert M[1, 1] == e1 ** 2 + e2
    assert det_bareiss(M) == e2


def test_parameter_domain():
    with pytest.raises(ParameterError):
        build("I03", 3, {"r": 0}, strict=True)
    with pytest.raises(ParameterError):
        build("I01", 3, {"zz": 1})


def test_entry_function():
    E = entry_function(lookup("I01"), {"a": 1, "b": 1})
    assert [[E(i, j) for j in range(2)] for i in range(2)] == [[2, 1], [4, 6]]


def test_delannoy():
    assert delannoy(1, 1) == 3
    assert all(delannoy(i, 0) == 1 for i in range(6))
    assert delannoy(2, 2) == 13
    for i in range(1, 6):
        for j in range(1, 6):
            assert delannoy(i, j) == delannoy(i - 1, j) + delannoy(i, j - 1) + delannoy(i - 1, j - 1)


def test_default_grid_is_sorted_and_complete():
    grid = default_grid(lookup("I03"))
    assert len(grid) == 8 * 4
    assert grid == sorted(grid, key=point_key)
    assert all("n" in p and "r" in p for p in grid)
    g4 = default_grid(lookup("I04"))
    assert all(p["n"] == p["c"] for p in g4)


def test_registry_loaded_once():
    assert load_registry() is load_registry()

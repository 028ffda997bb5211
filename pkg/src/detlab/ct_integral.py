"""Constant-term expansions and moment integrals by exact expansion."""

from fractions import Fraction
from math import factorial

from .exact import binomial, superfactorial
from .laurent import MultiLaurent, coefficient, ct, ct_all, vandermonde, x_names

__all__ = [
    "SizeGuardError",
    "ct_entry_representation_check",
    "dn_constant_term",
    "dyson_ct",
    "general_family_survey",
    "moment_integral",
    "selberg_like",
    "v2_coefficient",
    "v2_coefficient_check",
]


class SizeGuardError(ValueError):
    """Expansion requested beyond the desk-scale guard."""


_DYSON_GUARD = {1: 5, 2: 4}


def dyson_ct(n: int, alpha: int) -> int:
    """Constant term of prod_{j != i} (1 - x_i/x_j)^alpha by full expansion.

    Variables are folded in one at a time: once every factor touching x_v
    has been multiplied in, terms with nonzero x_v exponent are dropped.
    """
    if n < 1 or alpha < 0:
        raise ValueError("dyson_ct needs n >= 1 and alpha >= 0")
    limit = _DYSON_GUARD.get(alpha, 3 if alpha <= 3 else 2)
    if n > limit:
        raise SizeGuardError(f"dyson_ct(n={n}, alpha={alpha}) exceeds the guard n <= {limit}")
    names = x_names(n)
    p = MultiLaurent.constant(1, names=names)
    for v in range(n):
        for w in range(v + 1, n):
            for a, b in ((v, w), (w, v)):
                e = [0] * n
                e[a], e[b] = 1, -1
                factor = MultiLaurent({(0,) * n: 1, tuple(e): -1}, names)
                p = p * factor ** alpha
        # all factors with x_v are in: keep only its zero-exponent part
        p = MultiLaurent._raw({e: c for e, c in p.terms.items() if e[v] == 0}, names)
    return ct_all(p)


def v2_coefficient(n: int):
    """Coefficient of (x_0 ... x_{n-1})^(n-1) in V(x)^2."""
    if n > 6:
        raise SizeGuardError("v2_coefficient is guarded at n <= 6")
    v = vandermonde(n)
    return coefficient(v * v, (n - 1,) * n)


def v2_coefficient_check(n: int) -> int:
    c = v2_coefficient(n)
    expected = (-1) ** (n * (n - 1) // 2) * factorial(n)
    if c != expected:
        raise AssertionError(f"coefficient {c} differs from (-1)^C(n,2) n! = {expected}")
    return c


def _laurent_1d(coeffs: dict) -> MultiLaurent:
    return MultiLaurent({(e,): c for e, c in coeffs.items()}, ("x",))


def _binomial_power(c0, c1, e1, m):
    """(c0 + c1 x^e1)^m as a one-variable Laurent polynomial."""
    return _laurent_1d({e1 * k: binomial(m, k) * c0 ** (m - k) * c1 ** k for k in range(m + 1)})


def ct_entry_representation_check(i: int, j: int, weight: int) -> dict:
    """Expand the Laurent product behind a matrix entry and compare its CT.

    weight 1:  CT x^i (1+1/x)^(i+j)           == C(i+j, i)
               CT (1+x)^i (1+1/x)^j           == C(i+j, i)
    weight 2:  CT (1+2x)^(2i) (1+1/x)^(2j)    == sum_k C(2i,k) C(2j,k) 2^k
    weight 4:  CT (1+2x)^(2i) (1+2/x)^(2j)    == sum_k C(2i,k) C(2j,k) 4^k
    """
    if not (0 <= i <= 8 and 0 <= j <= 8):
        raise SizeGuardError("entry representation check is guarded at i, j <= 8")
    if weight == 1:
        mono = _laurent_1d({i: 1})
        forms = [mono * _binomial_power(1, 1, -1, i + j),
                 _binomial_power(1, 1, 1, i) * _binomial_power(1, 1, -1, j)]
        expected = binomial(i + j, i)
    elif weight == 2:
        forms = [_binomial_power(1, 2, 1, 2 * i) * _binomial_power(1, 1, -1, 2 * j)]
        expected = sum(binomial(2 * i, k) * binomial(2 * j, k) * 2 ** k for k in range(2 * min(i, j) + 1))
    elif weight == 4:
        forms = [_binomial_power(1, 2, 1, 2 * i) * _binomial_power(1, 2, -1, 2 * j)]
        expected = sum(binomial(2 * i, k) * binomial(2 * j, k) * 4 ** k for k in range(2 * min(i, j) + 1))
    else:
        raise ValueError("weight must be 1, 2 or 4")
    values = [ct_all(ct(f, 0)) for f in forms]
    return {"i": i, "j": j, "weight": weight, "ct": values, "expected": expected,
            "ok": all(v == expected for v in values)}


def dn_constant_term(n: int):
    """CT of prod_i (1+x_i)^i * prod_{j>i} (1/x_j - 1/x_i), which equals det[C(i+j, i)] = 1."""
    if n > 5:
        raise SizeGuardError("dn_constant_term is guarded at n <= 5")
    names = x_names(n)
    p = MultiLaurent.constant(1, names=names)
    for i in range(n):
        e = [0] * n
        e[i] = 1
        p = p * (1 + MultiLaurent({tuple(e): 1}, names)) ** i
    for i in range(n):
        for j in range(i + 1, n):
            inv_j = MultiLaurent.var(names[j], names, -1)
            inv_i = MultiLaurent.var(names[i], names, -1)
            p = p * (inv_j - inv_i)
    return ct_all(p)


def moment_integral(p: MultiLaurent, alpha: int = 0):
    """Integral over the positive orthant of p * X^alpha * exp(-sum x).

    Sends the monomial prod x_i^m_i to prod (m_i + alpha)! and extends
    linearly.
    """
    if alpha < 0 or int(alpha) != alpha:
        raise ValueError("alpha must be a nonnegative integer")
    total = 0
    for e, c in p.terms.items():
        if any(m < 0 for m in e):
            raise ValueError("moment_integral needs a polynomial (no negative exponents)")
        w = 1
        for m in e:
            w *= factorial(m + alpha)
        total += c * w
    return total if not isinstance(total, Fraction) or total.denominator != 1 else total.numerator


_SELBERG_GUARD = {1: 5, 2: 3}


def selberg_like(n: int, alpha: int = 0, beta: int = 1):
    """Integral of X^alpha V^(2 beta) exp(-sum x) over the positive orthant.

    For alpha = 0, beta = 1 the value is checked against n!! (n-1)!! and
    against n! det[(i+j)!].
    """
    if beta < 0 or alpha < 0:
        raise ValueError("alpha and beta must be >= 0")
    limit = _SELBERG_GUARD.get(beta, 5 if beta == 0 else 2)
    if n > limit:
        raise SizeGuardError(f"selberg_like(n={n}, beta={beta}) exceeds the guard n <= {limit}")
    v = vandermonde(n)
    value = moment_integral(v ** (2 * beta), alpha)
    if alpha == 0 and beta == 1:
        from .determinants import det_bareiss

        b_n = det_bareiss([[factorial(i + j) for j in range(n)] for i in range(n)])
        if value != superfactorial(n) * superfactorial(n - 1) or value != factorial(n) * b_n:
            raise AssertionError(f"Selberg-type value {value} disagrees at n={n}")
    return value


def general_family_survey(max_n: int = 4, max_param: int = 2):
    """Brute-force values of the three open-ended families, for conjecturing.

    Returns {"binomial": {(n, alpha, beta): det}, "dyson": {(n, alpha): ct},
    "moment": {(n, alpha, beta): integral}}.
    """
    from .determinants import det_bareiss

    out = {"binomial": {}, "dyson": {}, "moment": {}}
    for n in range(1, max_n + 1):
        for a in range(max_param + 1):
            for b in range(a + 1):
                M = [[binomial(i + j + a, i + b) for j in range(n)] for i in range(n)]
                out["binomial"][(n, a, b)] = det_bareiss(M)
            try:
                out["dyson"][(n, a)] = dyson_ct(n, a)
            except SizeGuardError:
                pass
            for beta in range(0, 3):
                try:
                    out["moment"][(n, a, beta)] = selberg_like(n, a, beta)
                except SizeGuardError:
                    pass
    return out

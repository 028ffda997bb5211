"""Determinant engines.

``det_bareiss`` is the workhorse; ``det_laplace`` is a slow independent
oracle; ``det_condensation`` evaluates shifted families through the Dodgson
recurrence; ``triangular_factor_det`` and ``binomial_lu_check`` cover the
triangular-factorization argument.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm

from .exact import ExactDivisionError, binomial, exact_div, normalize
from .families import ExactMatrix, entry_function, lookup, _resolve

__all__ = [
    "CondensationResult",
    "binomial_lu_check",
    "det",
    "det_bareiss",
    "det_condensation",
    "det_laplace",
    "dodgson_residual",
    "triangular_factor_det",
]

LAPLACE_MAX_N = 8


def _rows(M):
    if isinstance(M, ExactMatrix):
        return [list(r) for r in M.rows]
    rows = [list(r) for r in M]
    if any(len(r) != len(rows) for r in rows):
        raise ValueError("matrix must be square")
    return rows


def _is_zero(x):
    return not x


def _bareiss_core(a):
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if _is_zero(a[k][k]):
            for r in range(k + 1, n):
                if not _is_zero(a[r][k]):
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        piv = a[k][k]
        rk = a[k]
        for i in range(k + 1, n):
            ri = a[i]
            aik = ri[k]
            if _is_zero(aik):
                if prev == 1:
                    for j in range(k + 1, n):
                        ri[j] = ri[j] * piv
                else:
                    for j in range(k + 1, n):
                        ri[j] = exact_div(ri[j] * piv, prev)
            else:
                for j in range(k + 1, n):
                    num = ri[j] * piv - aik * rk[j]
                    ri[j] = num if prev == 1 else exact_div(num, prev)
            ri[k] = 0
        prev = piv
    d = a[n - 1][n - 1]
    return -d if sign < 0 else d


def det_bareiss(M):
    """Exact determinant by fraction-free elimination.

    Plain rational entries are first scaled row by row to integers; the
    result is divided back by the scaling afterwards.
    """
    a = _rows(M)
    if any(isinstance(x, Fraction) for r in a for x in r):
        scale = 1
        for r, row in enumerate(a):
            m = lcm(*(Fraction(x).denominator for x in row))
            scale *= m
            a[r] = [normalize(Fraction(x) * m) for x in row]
        return normalize(Fraction(_bareiss_core(a)) / scale)
    try:
        return _bareiss_core(a)
    except ExactDivisionError as exc:
        raise ExactDivisionError(f"Bareiss step was not exact: entry ring violated ({exc})") from exc


det = det_bareiss


def det_laplace(M):
    """Cofactor expansion along the first row (memoized on column sets)."""
    a = _rows(M)
    n = len(a)
    if n > LAPLACE_MAX_N:
        raise ValueError(f"Laplace oracle is capped at n <= {LAPLACE_MAX_N}, got {n}")
    if n == 0:
        return 1
    memo = {}

    def minor(row, cols):
        # determinant of rows row..n-1 restricted to the columns in cols
        if row == n:
            return 1
        key = (row, cols)
        if key in memo:
            return memo[key]
        total = 0
        sign = 1
        for idx, c in enumerate(cols):
            x = a[row][c]
            if not _is_zero(x):
                sub = minor(row + 1, cols[:idx] + cols[idx + 1:])
                term = x * sub
                total = total + term if sign > 0 else total - term
            sign = -sign
        memo[key] = total
        return total

    return minor(0, tuple(range(n)))


@dataclass
class CondensationResult:
    value: object
    fallbacks: int = 0
    fallback_cells: list = field(default_factory=list)


def det_condensation(identity_id, n, a=0, b=0, params=None, with_report=False):
    """Z_n(a,b) = det[E(i+a, j+b)] by the Dodgson recurrence.

    Z_m(a,b) = (Z_{m-1}(a,b) Z_{m-1}(a+1,b+1) - Z_{m-1}(a+1,b) Z_{m-1}(a,b+1))
               / Z_{m-2}(a+1,b+1)

    memoized on (m, a, b) within this call.  A zero divisor falls back to
    Bareiss on that cell and is counted.
    """
    spec = lookup(identity_id) if isinstance(identity_id, str) else identity_id
    if not spec.condense:
        raise ValueError(f"{spec.id} does not admit index-shift condensation")
    params = dict(params or {})
    for name, lo, _ in spec.params:
        params.setdefault(name, lo if name != spec.size else n)
    if spec.size:
        params[spec.size] = n
    _, params = _resolve(spec, n, params)
    E = entry_function(spec, params)
    memo = {}
    result = CondensationResult(None)

    def Z(m, da, db):
        if m == 0:
            return 1
        if m == 1:
            return E(da, db)
        key = (m, da, db)
        if key in memo:
            return memo[key]
        # a zero first row or column makes the cell 0 outright; recursing
        # into it would only manufacture zero divisors
        if (all(_is_zero(E(da, db + j)) for j in range(m))
                or all(_is_zero(E(da + i, db)) for i in range(m))):
            memo[key] = 0
            return 0
        div = Z(m - 2, da + 1, db + 1)
        if _is_zero(div):
            result.fallbacks += 1
            result.fallback_cells.append(key)
            v = det_bareiss([[E(i + da, j + db) for j in range(m)] for i in range(m)])
        else:
            num = Z(m - 1, da, db) * Z(m - 1, da + 1, db + 1) - Z(m - 1, da + 1, db) * Z(m - 1, da, db + 1)
            v = exact_div(num, div)
        memo[key] = v
        return v

    result.value = Z(n, a, b)
    return result if with_report else result.value


def dodgson_residual(identity_id, grid):
    """Check the Dodgson identity on Bareiss determinants of shifted minors.

    ``grid`` yields dicts with key n (>= 2) plus family parameters (missing
    ones take their domain minimum).  With Z_m(u,v) = det[E(i+u, j+v)] of
    size m the residual is

        Z_n(0,0) Z_{n-2}(1,1) - Z_{n-1}(0,0) Z_{n-1}(1,1) + Z_{n-1}(1,0) Z_{n-1}(0,1)

    Returns (violations, number_of_cells_checked).
    """
    spec = lookup(identity_id) if isinstance(identity_id, str) else identity_id
    violations = []
    checked = 0
    for cell in grid:
        cell = dict(cell)
        n = cell.pop("n")
        if n < 2:
            raise ValueError("Dodgson residual needs n >= 2")
        for name, lo, _ in spec.params:
            cell.setdefault(name, lo)
        E = entry_function(spec, cell)

        def Z(m, u, v):
            return det_bareiss([[E(i + u, j + v) for j in range(m)] for i in range(m)])

        res = (Z(n, 0, 0) * Z(n - 2, 1, 1)
               - Z(n - 1, 0, 0) * Z(n - 1, 1, 1)
               + Z(n - 1, 1, 0) * Z(n - 1, 0, 1))
        checked += 1
        if not _is_zero(res):
            violations.append(dict(cell, n=n, residual=res))
    return violations, checked


def triangular_factor_det(a_gen, b_gen, f, n, check=True):
    """det[sum_{k<=min(i,j)} a(i,k) b(j,k) f(k)] as prod a(i,i) b(i,i) f(i).

    The matrix factors as (lower triangular A) diag(f) (upper triangular B^T).
    With ``check`` the full matrix is rebuilt and compared with Bareiss.
    """
    value = 1
    for i in range(n):
        value = a_gen(i, i) * b_gen(i, i) * f(i) * value
    if check:
        M = [[_tri_entry(a_gen, b_gen, f, i, j) for j in range(n)] for i in range(n)]
        d = det_bareiss(M)
        if d != value:
            raise ArithmeticError(f"triangular factorization check failed at n={n}: {d} != {value}")
    return value


def _tri_entry(a_gen, b_gen, f, i, j):
    total = 0
    for k in range(min(i, j) + 1):
        total = a_gen(i, k) * b_gen(j, k) * f(k) + total
    return total


def binomial_lu_check(n):
    """Vandermonde-Chu factorization of [C(i+j, i)] into two unitriangular factors.

    C(i+j, i) = sum_k C(i,k) C(j,i-k) = sum_k C(i,k) C(j,k), i.e. L U with
    L = [C(i,k)] lower and U = [C(j,k)]_(k,j) upper triangular.

    Returns a dict with the entrywise match flag and the two triangular
    determinants (both must be 1).
    """
    entries_ok = all(
        binomial(i + j, i) == sum(binomial(i, k) * binomial(j, i - k) for k in range(i + 1))
        for i in range(n) for j in range(n))
    lower = [[binomial(i, k) for k in range(n)] for i in range(n)]
    upper = [[binomial(j, k) for j in range(n)] for k in range(n)]
    product_ok = all(
        sum(lower[i][k] * upper[k][j] for k in range(n)) == binomial(i + j, i)
        for i in range(n) for j in range(n))
    return {
        "n": n,
        "entries_match": entries_ok,
        "product_matches": product_ok,
        "det_lower": det_bareiss(lower),
        "det_upper": det_bareiss(upper),
    }

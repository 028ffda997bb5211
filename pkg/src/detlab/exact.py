"""Exact scalars and combinatorial primitives.

Integers are Python ``int`` and rationals are :class:`fractions.Fraction`.
This module adds :class:`QPoly`, a univariate Laurent polynomial in ``q``,
plus the factorial-type helpers used by the matrix families and their
closed forms.
"""

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

__all__ = [
    "ExactDivisionError",
    "QPoly",
    "binomial",
    "exact_div",
    "factorial",
    "normalize",
    "pochhammer",
    "q_binomial",
    "q_factorial",
    "q_int",
    "superfactorial",
]


class ExactDivisionError(ArithmeticError):
    """A division that was required to be exact left a remainder."""


def normalize(c):
    """Collapse a Fraction with unit denominator to ``int``."""
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def binomial(a: int, b: int) -> int:
    """C(a, b) with C(a, b) = 0 for b < 0 or b > a.

    Negative upper indices are rejected: every family in the catalog keeps
    its upper index nonnegative, and silently extending would hide bad grids.
    """
    if a < 0:
        raise ValueError(f"binomial upper index must be >= 0, got {a}")
    if b < 0 or b > a:
        return 0
    return comb(a, b)


@lru_cache(maxsize=None)
def superfactorial(m: int) -> int:
    """1! 2! ... m!  (empty product for m = 0)."""
    if m < 0:
        raise ValueError("superfactorial needs m >= 0")
    out = 1
    f = 1
    for k in range(1, m + 1):
        f *= k
        out *= f
    return out


def pochhammer(x, k: int):
    """Rising factorial (x)_k, extended to k < 0 by (x)_{-m} = 1/((x-m)...(x-1)).

    The extension is the unique one keeping (x)_{a+b} = (x)_a (x+a)_b.
    Raises ZeroDivisionError when a negative index meets a zero factor.
    """
    x = Fraction(x)
    out = Fraction(1)
    if k >= 0:
        for t in range(k):
            out *= x + t
        return normalize(out)
    for t in range(1, -k + 1):
        f = x - t
        if f == 0:
            raise ZeroDivisionError(f"pochhammer({x}, {k}) hits the zero factor x-{t}")
        out /= f
    return normalize(out)


def exact_div(a, b):
    """a / b in the ring of a and b, raising if the quotient is not exact."""
    if isinstance(a, int) and isinstance(b, int):
        q, r = divmod(a, b)
        if r:
            raise ExactDivisionError(f"{a} is not divisible by {b}")
        return q
    if isinstance(a, (int, Fraction)) and isinstance(b, (int, Fraction)):
        return normalize(Fraction(a) / b)
    if isinstance(a, (int, Fraction)):
        return type(b).constant(a, like=b).exact_div(b)
    return a.exact_div(b)


def _trim(coeffs, offset):
    lo = 0
    hi = len(coeffs)
    while lo < hi and not coeffs[lo]:
        lo += 1
    while hi > lo and not coeffs[hi - 1]:
        hi -= 1
    if lo == hi:
        return (), 0
    return tuple(coeffs[lo:hi]), offset + lo


class QPoly:
    """Laurent polynomial sum c_t q^(offset + t) with exact coefficients.

    Stored coefficients are trimmed on both ends, so the zero polynomial is
    the empty tuple and two equal polynomials have identical storage.
    """

    __slots__ = ("coeffs", "offset", "_hash")

    def __init__(self, coeffs=(), offset: int = 0):
        cs = [normalize(c) for c in coeffs]
        self.coeffs, self.offset = _trim(cs, offset)
        self._hash = None

    @classmethod
    def _raw(cls, coeffs, offset):
        p = object.__new__(cls)
        p.coeffs, p.offset = _trim(coeffs, offset)
        p._hash = None
        return p

    @classmethod
    def constant(cls, c, like=None):
        return cls._raw([normalize(c)], 0)

    @classmethod
    def monomial(cls, exponent: int, c=1):
        return cls._raw([c], exponent)

    @classmethod
    def q(cls):
        return cls._raw([1], 1)

    # -- inspection --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    @property
    def low(self) -> int:
        return self.offset

    @property
    def high(self) -> int:
        """Largest exponent present (undefined for zero: returns offset - 1)."""
        return self.offset + len(self.coeffs) - 1

    def degree(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no degree")
        return self.high

    def coefficient(self, e: int):
        t = e - self.offset
        if 0 <= t < len(self.coeffs):
            return self.coeffs[t]
        return 0

    def terms(self):
        for t, c in enumerate(self.coeffs):
            if c:
                yield self.offset + t, c

    def __call__(self, value):
        """Evaluate at q = value (exactly)."""
        value = Fraction(value)
        if not self.coeffs:
            return 0
        if value == 0:
            if self.offset < 0:
                raise ZeroDivisionError("negative power of q at q = 0")
            return self.coefficient(0)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return normalize(acc * value ** self.offset)

    def subs_power(self, r: int) -> "QPoly":
        """Substitute q -> q^r for r >= 1."""
        if r < 1:
            raise ValueError("subs_power needs r >= 1")
        if r == 1 or not self.coeffs:
            return self
        out = [0] * ((len(self.coeffs) - 1) * r + 1)
        for t, c in enumerate(self.coeffs):
            out[t * r] = c
        return QPoly._raw(out, self.offset * r)

    # -- arithmetic --------------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, QPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return QPoly._raw([normalize(other)], 0)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other.coeffs:
            return self
        if not self.coeffs:
            return other
        lo = min(self.offset, other.offset)
        hi = max(self.high, other.high)
        out = [0] * (hi - lo + 1)
        for t, c in enumerate(self.coeffs, self.offset - lo):
            out[t] = c
        for t, c in enumerate(other.coeffs, other.offset - lo):
            out[t] += c
        return QPoly._raw(out, lo)

    __radd__ = __add__

    def __neg__(self):
        return QPoly._raw([-c for c in self.coeffs], self.offset)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return QPoly._raw((), 0)
        if len(b) == 1:
            c = b[0]
            return QPoly._raw([x * c for x in a], self.offset + other.offset)
        if len(a) == 1:
            c = a[0]
            return QPoly._raw([c * x for x in b], self.offset + other.offset)
        out = [0] * (len(a) + len(b) - 1)
        for s, x in enumerate(a):
            if x:
                for t, y in enumerate(b, s):
                    out[t] += x * y
        return QPoly._raw(out, self.offset + other.offset)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            if len(self.coeffs) == 1:
                c = Fraction(1, 1) / self.coeffs[0]
                return QPoly._raw([normalize(c ** -k)], self.offset * k)
            raise ValueError("only monomials have Laurent inverses")
        out = QPoly._raw([1], 0)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def divmod(self, other: "QPoly"):
        """Long division by other after aligning both low ends at q^0.

        Returns (quotient, remainder) with self = quotient*other + remainder
        and remainder of smaller span than other.
        """
        other = self._coerce(other)
        if not other.coeffs:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self.coeffs:
            return QPoly._raw((), 0), QPoly._raw((), 0)
        num = list(self.coeffs)
        den = other.coeffs
        lead = den[-1]
        dl = len(den)
        if len(num) < dl:
            return QPoly._raw((), 0), self
        quot = [0] * (len(num) - dl + 1)
        ints = all(isinstance(c, int) for c in num) and all(isinstance(c, int) for c in den)
        for s in range(len(num) - dl, -1, -1):
            c = num[s + dl - 1]
            if not c:
                continue
            if ints and lead in (1, -1):
                f = c * lead
            elif ints and c % lead == 0:
                f = c // lead
            else:
                ints = False
                f = normalize(Fraction(c) / lead)
            quot[s] = f
            for t in range(dl):
                num[s + t] -= f * den[t]
        qp = QPoly._raw(quot, self.offset - other.offset)
        rp = QPoly._raw(num[: dl - 1], self.offset)
        return qp, rp

    def exact_div(self, other):
        other = self._coerce(other)
        if not other.coeffs:
            raise ZeroDivisionError("division by the zero polynomial")
        if len(other.coeffs) == 1:
            c = other.coeffs[0]
            if c in (1, -1):
                cs = self.coeffs if c == 1 else [-x for x in self.coeffs]
            else:
                cs = [normalize(Fraction(x) / c) for x in self.coeffs]
            return QPoly._raw(cs, self.offset - other.offset)
        quo, rem = self.divmod(other)
        if rem.coeffs:
            raise ExactDivisionError("polynomial division left a remainder")
        return quo

    def __truediv__(self, other):
        return self.exact_div(other)

    def __rtruediv__(self, other):
        return QPoly._coerce(other).exact_div(self)

    # -- comparison / display ---------------------------------------------

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return self.coeffs == other.coeffs and (not self.coeffs or self.offset == other.offset)

    def __hash__(self):
        if self._hash is None:
            if len(self.coeffs) == 1 and self.offset == 0:
                self._hash = hash(self.coeffs[0])
            else:
                self._hash = hash((self.coeffs, self.offset))
        return self._hash

    def __repr__(self):
        return f"QPoly({format_qpoly(self)!r})"

    def __str__(self):
        return format_qpoly(self)


def _format_coeff_term(c, mono: str) -> str:
    if not mono:
        return str(c)
    if c == 1:
        return mono
    if c == -1:
        return "-" + mono
    return f"{c}*{mono}"


def format_qpoly(p: QPoly, var: str = "q") -> str:
    """Canonical rendering, ascending powers: ``1 + q + 2*q^2 - q^-1``..."""
    if not p.coeffs:
        return "0"
    parts = []
    for e, c in p.terms():
        if e == 0:
            mono = ""
        elif e == 1:
            mono = var
        else:
            mono = f"{var}^{e}"
        parts.append(_format_coeff_term(c, mono))
    out = parts[0]
    for s in parts[1:]:
        out += " - " + s[1:] if s.startswith("-") else " + " + s
    return out


@lru_cache(maxsize=None)
def q_int(n: int) -> QPoly:
    """[n]_q = 1 + q + ... + q^(n-1); [0]_q = 0."""
    if n < 0:
        raise ValueError("q_int needs n >= 0")
    return QPoly._raw([1] * n, 0)


@lru_cache(maxsize=None)
def q_factorial(n: int) -> QPoly:
    """[n]!_q = [1]_q [2]_q ... [n]_q."""
    if n < 0:
        raise ValueError("q_factorial needs n >= 0")
    if n == 0:
        return QPoly._raw([1], 0)
    return q_factorial(n - 1) * q_int(n)


@lru_cache(maxsize=None)
def q_binomial(n: int, k: int) -> QPoly:
    """Gaussian polynomial [n]!/([k]! [n-k]!), zero outside 0 <= k <= n."""
    if n < 0:
        raise ValueError("q_binomial upper index must be >= 0")
    if k < 0 or k > n:
        return QPoly._raw((), 0)
    k = min(k, n - k)
    num = QPoly._raw([1], 0)
    for t in range(n - k + 1, n + 1):
        num = num * q_int(t)
    try:
        return num.exact_div(q_factorial(k))
    except ExactDivisionError as exc:  # pragma: no cover - would be a bug
        raise ArithmeticError(f"Gaussian binomial ({n},{k}) is not a polynomial") from exc

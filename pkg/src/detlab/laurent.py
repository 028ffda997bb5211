"""Sparse multivariate Laurent polynomials over the rationals.

A :class:`MultiLaurent` is a dict from fixed-arity integer exponent tuples
to nonzero coefficients, together with a tuple of variable names.  Values
in rings with the same name table combine; plain ints and Fractions are
promoted to constants.
"""

from fractions import Fraction
from itertools import permutations
from math import prod

from .exact import ExactDivisionError, QPoly, normalize

__all__ = [
    "MultiLaurent",
    "coefficient",
    "ct",
    "ct_all",
    "vandermonde",
    "x_names",
]


def _cdiv(a, b):
    if isinstance(a, int) and isinstance(b, int) and a % b == 0:
        return a // b
    return normalize(Fraction(a) / b)


def x_names(n: int) -> tuple:
    return tuple(f"x{i}" for i in range(n))


class MultiLaurent:
    __slots__ = ("names", "terms", "_hash")

    def __init__(self, terms=None, names=()):
        self.names = tuple(names)
        arity = len(self.names)
        clean = {}
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != arity:
                raise ValueError(f"exponent {e} does not match variables {self.names}")
            c = normalize(c)
            if c:
                clean[e] = clean.get(e, 0) + c
        self.terms = {e: c for e, c in clean.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, terms, names):
        p = object.__new__(cls)
        p.names = names
        p.terms = terms
        p._hash = None
        return p

    @classmethod
    def constant(cls, c, like=None, names=None):
        names = like.names if like is not None else tuple(names or ())
        c = normalize(c)
        return cls._raw({(0,) * len(names): c} if c else {}, names)

    @classmethod
    def var(cls, name, names, power: int = 1):
        names = tuple(names)
        e = [0] * len(names)
        e[names.index(name)] = power
        return cls._raw({tuple(e): 1}, names)

    @classmethod
    def from_qpoly(cls, p: QPoly, names, var: str = "q"):
        names = tuple(names)
        slot = names.index(var)
        base = [0] * len(names)
        out = {}
        for e, c in p.terms():
            k = list(base)
            k[slot] = e
            out[tuple(k)] = c
        return cls._raw(out, names)

    # -- inspection --------------------------------------------------------

    @property
    def arity(self) -> int:
        return len(self.names)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def coefficient(self, exponent):
        exponent = tuple(exponent)
        if len(exponent) != self.arity:
            raise ValueError("exponent vector arity mismatch")
        return self.terms.get(exponent, 0)

    def total_degrees(self):
        return {sum(e) for e in self.terms}

    def evaluate(self, values):
        """Exact evaluation at a mapping name -> rational (or a sequence)."""
        if isinstance(values, dict):
            values = [values[n] for n in self.names]
        vals = [Fraction(v) for v in values]
        acc = Fraction(0)
        for e, c in self.terms.items():
            acc += c * prod((v ** k for v, k in zip(vals, e)), start=Fraction(1))
        return normalize(acc)

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, MultiLaurent):
            if other.names != self.names:
                raise ValueError(f"ring mismatch: {self.names} vs {other.names}")
            return other
        if isinstance(other, (int, Fraction)):
            return MultiLaurent.constant(other, like=self)
        if isinstance(other, QPoly) and "q" in self.names:
            return MultiLaurent.from_qpoly(other, self.names)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if len(other.terms) > len(self.terms):
            a, b = other.terms, self.terms
        else:
            a, b = self.terms, other.terms
        out = dict(a)
        for e, c in b.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return MultiLaurent._raw(out, self.names)

    __radd__ = __add__

    def __neg__(self):
        return MultiLaurent._raw({e: -c for e, c in self.terms.items()}, self.names)

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
        out = {}
        get = out.get
        bt = list(other.terms.items())
        for ea, ca in self.terms.items():
            for eb, cb in bt:
                e = tuple(x + y for x, y in zip(ea, eb))
                out[e] = get(e, 0) + ca * cb
        return MultiLaurent._raw({e: c for e, c in out.items() if c}, self.names)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            if len(self.terms) != 1:
                raise ValueError("only monomials have Laurent inverses")
            (e, c), = self.terms.items()
            return MultiLaurent._raw(
                {tuple(x * k for x in e): normalize(Fraction(1) / c ** -k)}, self.names)
        out = MultiLaurent.constant(1, like=self)
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def exact_div(self, other):
        """Quotient of an exact division, by lex leading-term elimination.

        Each quotient exponent must lie in the box between the per-variable
        min/max exponent differences; leaving that box proves a remainder.
        """
        other = self._coerce(other)
        if not other.terms:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self.terms:
            return self
        if len(other.terms) == 1:
            (eb, cb), = other.terms.items()
            return MultiLaurent._raw(
                {tuple(x - y for x, y in zip(e, eb)): _cdiv(c, cb) for e, c in self.terms.items()},
                self.names)
        k = self.arity
        lo = [min(e[v] for e in self.terms) - min(e[v] for e in other.terms) for v in range(k)]
        hi = [max(e[v] for e in self.terms) - max(e[v] for e in other.terms) for v in range(k)]
        lead_e = max(other.terms)
        lead_c = other.terms[lead_e]
        rest = [(e, c) for e, c in other.terms.items() if e != lead_e]
        rem = dict(self.terms)
        quot = {}
        while rem:
            e = max(rem)
            c = rem.pop(e)
            t = tuple(x - y for x, y in zip(e, lead_e))
            if any(t[v] < lo[v] or t[v] > hi[v] for v in range(k)):
                raise ExactDivisionError("multivariate division left a remainder")
            f = _cdiv(c, lead_c)
            quot[t] = f
            for eb, cb in rest:
                s = tuple(x + y for x, y in zip(t, eb))
                v = rem.get(s, 0) - f * cb
                if v:
                    rem[s] = v
                else:
                    rem.pop(s, None)
        return MultiLaurent._raw(quot, self.names)

    def __truediv__(self, other):
        return self.exact_div(other)

    # -- comparison / display ---------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return not self.terms
            return self.terms == {(0,) * self.arity: other}
        if isinstance(other, QPoly) and "q" in self.names:
            other = MultiLaurent.from_qpoly(other, self.names)
        if not isinstance(other, MultiLaurent):
            return False
        return self.names == other.names and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            if not self.terms:
                self._hash = hash(0)
            elif len(self.terms) == 1 and (0,) * self.arity in self.terms:
                self._hash = hash(self.terms[(0,) * self.arity])
            else:
                self._hash = hash((self.names, frozenset(self.terms.items())))
        return self._hash

    def __repr__(self):
        return f"MultiLaurent({format_multi(self)!r}, names={self.names})"

    def __str__(self):
        return format_multi(self)


def _mono_str(names, e):
    parts = []
    for name, k in zip(names, e):
        if k == 1:
            parts.append(name)
        elif k:
            parts.append(f"{name}^{k}")
    return "*".join(parts)


def format_multi(p: MultiLaurent) -> str:
    """Canonical rendering: terms sorted by descending exponent tuple."""
    if not p.terms:
        return "0"
    pieces = []
    for e in sorted(p.terms, reverse=True):
        c = p.terms[e]
        mono = _mono_str(p.names, e)
        if not mono:
            pieces.append(str(c))
        elif c == 1:
            pieces.append(mono)
        elif c == -1:
            pieces.append("-" + mono)
        else:
            pieces.append(f"{c}*{mono}")
    out = pieces[0]
    for s in pieces[1:]:
        out += " - " + s[1:] if s.startswith("-") else " + " + s
    return out


def ct(p: MultiLaurent, var_index: int) -> MultiLaurent:
    """Coefficient of x_var^0, with that variable removed from the ring."""
    if not 0 <= var_index < p.arity:
        raise IndexError(f"no variable with index {var_index} in {p.names}")
    names = p.names[:var_index] + p.names[var_index + 1:]
    out = {e[:var_index] + e[var_index + 1:]: c for e, c in p.terms.items() if e[var_index] == 0}
    return MultiLaurent._raw(out, names)


def ct_all(p: MultiLaurent):
    """Coefficient of the all-zero exponent vector."""
    return p.terms.get((0,) * p.arity, 0)


def coefficient(p: MultiLaurent, exponent_vector):
    return p.coefficient(exponent_vector)


def vandermonde(n: int, names=None) -> MultiLaurent:
    """Expanded product over j > i of (x_j - x_i).

    Built as the signed permutation sum of the power matrix [x_i^j], which
    gives exactly n! terms without any cancellation.
    """
    if n < 1:
        raise ValueError("vandermonde needs n >= 1")
    names = tuple(names) if names is not None else x_names(n)
    if len(names) < n:
        raise ValueError("not enough variables")
    pad = (0,) * (len(names) - n)
    terms = {}
    for perm in permutations(range(n)):
        inversions = sum(1 for a in range(n) for b in range(a + 1, n) if perm[a] > perm[b])
        # monomial prod_i x_i^{perm[i]} appears in det[x_i^j] with sign(perm)
        terms[tuple(perm) + pad] = -1 if inversions % 2 else 1
    return MultiLaurent._raw(terms, names)

"""Guess hypergeometric-type product formulas for exact sequences.

Given s(1), ..., s(m), let r(n) = s(n+1)/s(n) and rho(n) = r(n+1)/r(n).
A fit is a rational function rho(n) = P(n)/Q(n); the sequence is then

    s(n) = s(1) * prod_{m=1}^{n-1} r(m),    r(m) = r(1) * prod_{t=1}^{m-1} P(t)/Q(t).

Two strategies are tried in order:

1. exact interpolation of P - rho Q = 0 for deg P, deg Q <= d, d = 0..4,
   keeping at least one rho value out of the fit for validation;
2. a beam search over products of linear factors a*n+b with small a, b,
   fitted on all but the last rho value, which is held out.

Output is always flagged as conjectured.
"""

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "NoFit",
    "ProductFormula",
    "RoundnessReport",
    "guess_product_form",
    "parse_sequence",
    "roundness",
]

MAX_DEGREE = 4


# -- small exact polynomial helpers (ascending coefficient lists) -----------

def _peval(p, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def _ptrim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def _pmul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _pdivmod(a, b):
    a = [Fraction(c) for c in _ptrim(a)]
    b = _ptrim(b)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b) and a:
        f = a[-1] / b[-1]
        s = len(a) - len(b)
        q[s] = f
        for i, c in enumerate(b):
            a[s + i] -= f * c
        a = _ptrim(a)
    return _ptrim(q), a


def _pgcd(a, b):
    a, b = _ptrim(a), _ptrim(b)
    while b:
        _, r = _pdivmod(a, b)
        a, b = b, r
    return [c / a[-1] for c in a] if a else [Fraction(1)]


def _canonical(P, Q):
    """Coprime integer pair, joint content 1, leading coefficient of Q positive."""
    g = _pgcd(P, Q)
    if len(g) > 1:
        P, _ = _pdivmod(P, g)
        Q, _ = _pdivmod(Q, g)
    P = [Fraction(c) for c in _ptrim(P)]
    Q = [Fraction(c) for c in _ptrim(Q)]
    den = math.lcm(*(c.denominator for c in P + Q))
    P = [int(c * den) for c in P]
    Q = [int(c * den) for c in Q]
    content = math.gcd(*(abs(c) for c in P + Q))
    P = [c // content for c in P]
    Q = [c // content for c in Q]
    if Q[-1] < 0:
        P = [-c for c in P]
        Q = [-c for c in Q]
    return tuple(P), tuple(Q)


def _format_poly(p, var="n"):
    parts = []
    for e in range(len(p) - 1, -1, -1):
        c = p[e]
        if not c:
            continue
        mono = "" if e == 0 else (var if e == 1 else f"{var}^{e}")
        if not mono:
            body = str(abs(c))
        elif abs(c) == 1:
            body = mono
        else:
            body = f"{abs(c)}*{mono}"
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    if not parts:
        return "0"
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


# -- result types ------------------------------------------------------------

@dataclass(frozen=True)
class NoFit:
    reason: str

    def __bool__(self):
        return False


@dataclass(frozen=True)
class ProductFormula:
    """s(n) = first * prod_{m<n} ratio * prod_{t<m} P(t)/Q(t), for n >= 1."""

    first: Fraction
    ratio: Fraction
    num: tuple
    den: tuple
    method: str = "interpolation"
    conjectured: bool = True

    def rho(self, t):
        return Fraction(_peval(self.num, t), _peval(self.den, t))

    def __call__(self, n: int):
        if n < 1:
            raise ValueError("sequence index starts at 1")
        value = Fraction(self.first)
        r = Fraction(self.ratio)
        for m in range(1, n):
            value *= r
            r *= self.rho(m)
        return value.numerator if value.denominator == 1 else value

    def values(self, count: int):
        return [self(n) for n in range(1, count + 1)]

    @property
    def degree(self):
        return max(len(self.num), len(self.den)) - 1

    def describe(self) -> str:
        return (f"s(n) = {self.first} * prod_(m=1..n-1) r(m),  r(m) = {self.ratio} * "
                f"prod_(t=1..m-1) ({_format_poly(self.num, 't')}) / ({_format_poly(self.den, 't')})"
                + ("  [conjectured]" if self.conjectured else ""))

    def to_line(self) -> str:
        """Serialize in the catalog record syntax."""
        return " | ".join([
            "formula",
            f"first={self.first}",
            f"ratio={self.ratio}",
            "num=" + ",".join(map(str, self.num)),
            "den=" + ",".join(map(str, self.den)),
            f"method={self.method}",
            "status=" + ("conjectured" if self.conjectured else "verified"),
        ])

    @classmethod
    def from_line(cls, line: str) -> "ProductFormula":
        head, *rest = [p.strip() for p in line.split("|")]
        if head != "formula":
            raise ValueError(f"not a formula record: {line!r}")
        f = dict(p.split("=", 1) for p in rest)
        return cls(Fraction(f["first"]), Fraction(f["ratio"]),
                   tuple(int(c) for c in f["num"].split(",")),
                   tuple(int(c) for c in f["den"].split(",")),
                   f.get("method", "interpolation"), f.get("status", "conjectured") == "conjectured")


# -- fitting -----------------------------------------------------------------

def _nullspace(rows, ncols):
    """Rational nullspace basis of a matrix given as a list of rows."""
    a = [[Fraction(x) for x in r] for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == len(a):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for row, pc in zip(a, pivots):
            v[pc] = -row[fc]
        basis.append(v)
    return basis


def _fits(P, Q, points, rho):
    for t in points:
        qv = _peval(Q, t)
        if qv == 0 or Fraction(_peval(P, t)) / qv != rho[t]:
            return False
    return True


def _interpolate(rho, max_degree):
    ks = sorted(rho)
    for d in range(max_degree + 1):
        need = 2 * d + 1
        if len(ks) < need + 1:
            break
        fit = ks[:need]
        rows = []
        for t in fit:
            rows.append([Fraction(t) ** e for e in range(d + 1)] +
                        [-rho[t] * Fraction(t) ** e for e in range(d + 1)])
        basis = _nullspace(rows, 2 * d + 2)
        if len(basis) != 1:
            continue
        v = basis[0]
        P, Q = v[:d + 1], v[d + 1:]
        if not _ptrim(Q) or not _fits(P, Q, ks, rho):
            continue
        return _canonical(P, Q)
    return None


def _linear_forms(max_a=12):
    forms = []
    for a in range(1, max_a + 1):
        for b in range(1 - a, 2 * a + 7):
            if math.gcd(a, b) == 1:
                forms.append((a, b))
    return forms


def _bits(x: Fraction):
    return abs(x.numerator).bit_length() + x.denominator.bit_length() - 1


def _factor_search(rho, max_factors=2 * MAX_DEGREE, beam=40):
    ks = sorted(rho)
    if len(ks) < 3:
        return None
    fit, hold = ks[:-1], ks[-1:]
    t0 = fit[0]
    forms = _linear_forms()
    # value table of each form at the fit points, relative to t0
    rel = {f: [Fraction(f[0] * t + f[1], f[0] * t0 + f[1]) for t in fit[1:]] for f in forms}
    base = [rho[t] / rho[t0] for t in fit[1:]]

    def cost(u):
        return sum(_bits(x) for x in u)

    start = (Counter(), base)
    frontier = [start]
    seen = set()
    solutions = []
    for depth in range(max_factors + 1):
        for chosen, u in frontier:
            if all(x == 1 for x in u):
                solutions.append(chosen)
        if solutions:
            break
        cand = []
        for chosen, u in frontier:
            cu = cost(u)
            for f in forms:
                for e in (1, -1):
                    if chosen[f] * e < 0:
                        continue
                    if sum(1 for g, k in chosen.items() if k * e > 0 for _ in range(abs(k))) >= MAX_DEGREE:
                        continue
                    vals = rel[f]
                    nu = [x / v if e > 0 else x * v for x, v in zip(u, vals)]
                    c = cost(nu)
                    if c >= cu:
                        continue
                    nxt = chosen.copy()
                    nxt[f] += e
                    key = frozenset((g, k) for g, k in nxt.items() if k)
                    if key in seen:
                        continue
                    seen.add(key)
                    cand.append((c, sum(abs(g[0]) + abs(g[1]) for g in nxt), nxt, nu))
        if not cand:
            break
        cand.sort(key=lambda z: (z[0], z[1]))
        frontier = [(z[2], z[3]) for z in cand[:beam]]

    results = []
    for chosen in solutions:
        P, Q = [Fraction(1)], [Fraction(1)]
        for (a, b), e in chosen.items():
            for _ in range(abs(e)):
                if e > 0:
                    P = _pmul(P, [b, a])
                else:
                    Q = _pmul(Q, [b, a])
        scale = rho[t0] * _peval(Q, t0) / _peval(P, t0)
        P = [scale * c for c in P]
        if _fits(P, Q, ks, rho):
            results.append(_canonical(P, Q))
    if not results:
        return None
    results.sort(key=lambda pq: (len(pq[0]) + len(pq[1]), max(abs(c) for c in pq[0] + pq[1])))
    return results[0]


def guess_product_form(seq, max_degree: int = MAX_DEGREE):
    """Conjecture a product formula for s(1..m); returns ProductFormula or NoFit."""
    s = [Fraction(x) for x in seq]
    if len(s) < 6:
        raise ValueError("guess_product_form needs at least 6 terms")
    if any(x == 0 for x in s):
        raise ValueError("sequence terms must be nonzero")
    r = {n: s[n] / s[n - 1] for n in range(1, len(s))}  # r(n) for n = 1..m-1
    rho = {n: r[n + 1] / r[n] for n in range(1, len(s) - 1)}
    method = "interpolation"
    pq = _interpolate(rho, max_degree)
    if pq is None:
        method = "linear-factors"
        pq = _factor_search(rho)
    if pq is None:
        return NoFit("no rational second ratio of degree <= %d found" % max_degree)
    P, Q = pq
    if max(len(P), len(Q)) - 1 > max_degree:
        return NoFit("fitted degree exceeds the limit")
    formula = ProductFormula(s[0], r[1], P, Q, method)
    if [Fraction(v) for v in formula.values(len(s))] != s:
        return NoFit("fitted ratio does not reproduce the input")
    return formula


# -- roundness ---------------------------------------------------------------

@dataclass
class RoundnessReport:
    largest_prime: list
    prime_bound: int
    round: bool


def _largest_prime(x: int) -> int:
    from sympy import factorint

    x = abs(x)
    if x <= 1:
        return 1
    return max(factorint(x))


def roundness(seq, prime_bound: int) -> RoundnessReport:
    """Largest prime factor of each term; "round" when all are <= prime_bound."""
    largest = []
    for x in seq:
        x = Fraction(x)
        largest.append(max(_largest_prime(x.numerator), _largest_prime(x.denominator)))
    return RoundnessReport(largest, prime_bound, all(p <= prime_bound for p in largest))


def parse_sequence(text: str):
    """One exact value per line, integer or ``num/den``; '#' starts a comment."""
    out = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            out.append(Fraction(line))
    return out

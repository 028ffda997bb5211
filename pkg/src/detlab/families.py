"""Identity registry and matrix builders.

The registry is loaded from ``data/identities.catalog``.  Each record names
an entry rule from the closed vocabulary in :mod:`detlab.catalog`; this
module turns a record plus a parameter point into an :class:`ExactMatrix`.
"""

from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from itertools import product
from math import factorial

from .catalog import CatalogError, Record, parse_catalog
from .exact import QPoly, binomial, q_binomial, q_int
from .laurent import MultiLaurent

__all__ = [
    "ExactMatrix",
    "IdentitySpec",
    "ParameterError",
    "Ring",
    "build",
    "default_grid",
    "delannoy",
    "entry_function",
    "list_identities",
    "load_registry",
    "lookup",
]

IdentitySpec = Record


class ParameterError(ValueError):
    """A parameter point outside an identity's declared domain."""


@dataclass(frozen=True)
class ExactMatrix:
    n: int
    rows: tuple
    ring: str

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def tolist(self):
        return [list(r) for r in self.rows]

    def is_symmetric(self) -> bool:
        return all(self.rows[i][j] == self.rows[j][i] for i in range(self.n) for j in range(i))

    def map(self, fn) -> "ExactMatrix":
        return ExactMatrix(self.n, tuple(tuple(fn(x) for x in r) for r in self.rows), self.ring)

    @classmethod
    def from_rows(cls, rows, ring="integer"):
        rows = tuple(tuple(r) for r in rows)
        if any(len(r) != len(rows) for r in rows):
            raise ValueError("matrix must be square")
        return cls(len(rows), rows, ring)


class Ring:
    """Lifts factor values into the ring named by a record's ring tag."""

    def __init__(self, tag: str, names=()):
        self.tag = tag
        self.names = tuple(names)
        if tag == "multivariate" and not self.names:
            raise CatalogError("multivariate ring needs variables")

    def lift(self, v):
        if self.tag in ("integer", "rational"):
            if isinstance(v, QPoly):
                raise CatalogError(f"q-polynomial value in {self.tag} ring")
            return v
        if self.tag == "q-poly":
            return v if isinstance(v, QPoly) else QPoly.constant(v)
        if isinstance(v, QPoly):
            return MultiLaurent.from_qpoly(v, self.names)
        if isinstance(v, MultiLaurent):
            return v
        return MultiLaurent.constant(v, names=self.names)

    def one(self):
        return self.lift(1)

    def var_power(self, name, e):
        if self.tag == "q-poly" and name == "q":
            return QPoly.monomial(e)
        if self.tag == "multivariate" and name in self.names:
            return MultiLaurent.var(name, self.names, e)
        raise CatalogError(f"variable {name!r} not available in {self.tag} ring")


@lru_cache(maxsize=None)
def _qprod(k: int) -> QPoly:
    out = QPoly.constant(1)
    for l in range(k + 1):
        out = out * (1 + QPoly.monomial(l))
    return out


def _factor_value(f, env, ring: Ring):
    a = [lin(env) for lin in f.args]
    if f.kind == "binom":
        return binomial(a[0], a[1])
    if f.kind == "qbinom":
        return q_binomial(a[0], a[1])
    if f.kind == "factorial":
        return factorial(a[0])
    if f.kind == "qint":
        return q_int(a[0])
    if f.kind == "qprod":
        return _qprod(a[0])
    if f.kind == "pow":
        if isinstance(f.base, int):
            if a[0] < 0:
                raise ParameterError("negative power of an integer base")
            return f.base ** a[0]
        return ring.var_power(f.base, a[0])
    raise CatalogError(f"unknown factor kind {f.kind}")


def _product_value(factors, env, ring):
    v = 1
    for f in factors:
        x = _factor_value(f, env, ring)
        if not x:
            return 0
        v = x * v if isinstance(x, (QPoly, MultiLaurent)) else v * x
    return v


def entry_function(spec: Record, params: dict):
    """Return E(i, j) for the record at the given parameter values."""
    entry = spec.entry
    if entry.special:
        raise ValueError(f"{spec.id} is a {entry.special} check, not a matrix family")
    ring = Ring(spec.ring, spec.vars)
    base_env = dict(params)

    if not entry.is_sum:
        def E(i, j):
            env = dict(base_env, i=i, j=j)
            return ring.lift(_product_value(entry.factors, env, ring))
        return E

    lo_lin, hi_lin = entry.limit

    def E(i, j):
        env = dict(base_env, i=i, j=j)
        top = min(lo_lin(env), hi_lin(env))
        total = ring.lift(0)
        for k in range(top + 1):
            env["k"] = k
            term = _product_value(entry.factors, env, ring)
            if term:
                total = total + term
        return ring.lift(total)

    return E


@lru_cache(maxsize=1)
def load_registry():
    text = resources.files("detlab").joinpath("data/identities.catalog").read_text()
    recs = parse_catalog(text)
    for r in recs:
        _check_record(r)
    return {r.id: r for r in recs}


_INDEX_SYMBOLS = {"i", "j", "k", "n"}


def _check_record(r: Record):
    declared = {p[0] for p in r.params} | _INDEX_SYMBOLS
    used = set()
    for f in r.entry.factors:
        for lin in f.args:
            used |= lin.symbols()
    if r.entry.limit:
        for lin in r.entry.limit:
            used |= lin.symbols()
    missing = used - declared
    if missing:
        raise CatalogError(f"{r.id}: undeclared symbols {sorted(missing)}")
    if r.size and r.size not in declared:
        raise CatalogError(f"{r.id}: size parameter {r.size!r} not declared")


def list_identities():
    return list(load_registry().values())


def lookup(identity_id: str) -> Record:
    try:
        return load_registry()[identity_id]
    except KeyError:
        raise KeyError(f"unknown identity {identity_id!r}") from None


def param_names(spec: Record):
    return {p[0] for p in spec.params}


def _resolve(spec: Record, n, params):
    params = dict(params or {})
    domains = {name: (lo, hi) for name, lo, hi in spec.params}
    unknown = set(params) - set(domains)
    if unknown:
        raise ParameterError(f"{spec.id}: unknown parameters {sorted(unknown)}")
    if spec.size:
        if spec.size not in params and n is not None:
            params[spec.size] = n
        if spec.size not in params:
            raise ParameterError(f"{spec.id}: size parameter {spec.size!r} required")
        if n is not None and n != params[spec.size]:
            raise ParameterError(f"{spec.id}: n={n} disagrees with {spec.size}={params[spec.size]}")
        n = params[spec.size]
    missing = set(domains) - set(params)
    if missing:
        raise ParameterError(f"{spec.id}: missing parameters {sorted(missing)}")
    if n is None or n < 1:
        raise ParameterError(f"{spec.id}: matrix size must be >= 1")
    return n, params


def check_domain(spec: Record, n, params):
    """Raise ParameterError if the point leaves the declared default domain."""
    n, params = _resolve(spec, n, params)
    for name, lo, hi in spec.params:
        if not lo <= params[name] <= hi:
            raise ParameterError(f"{spec.id}: {name}={params[name]} outside {lo}..{hi}")
    return n, params


def build(identity_id, n=None, params=None, strict=False) -> ExactMatrix:
    """Materialize the n x n matrix of a registered family.

    With ``strict`` the point must lie inside the catalog's default domain;
    otherwise any point that keeps binomial upper indices nonnegative works.
    """
    spec = lookup(identity_id) if isinstance(identity_id, str) else identity_id
    n, params = (check_domain if strict else _resolve)(spec, n, params)
    E = entry_function(spec, params)
    rows = tuple(tuple(E(i, j) for j in range(n)) for i in range(n))
    return ExactMatrix(n, rows, spec.ring)


def default_grid(spec: Record, n_range=None, param_ranges=None):
    """Parameter points of an identity as sorted list of dicts with key 'n'.

    ``n_range`` and ``param_ranges`` ({name: (lo, hi)}) override defaults;
    the size parameter of box-type records follows the n range.
    """
    lo, hi = spec.n
    if n_range is not None:
        lo, hi = n_range
    ranges = {name: (a, b) for name, a, b in spec.params}
    for name, rng in (param_ranges or {}).items():
        if name not in ranges:
            raise ParameterError(f"{spec.id}: unknown parameter {name!r}")
        ranges[name] = rng
    names = sorted(ranges)
    if spec.size:
        a, b = ranges[spec.size]
        ranges[spec.size] = (max(a, lo), min(b, hi))
        sizes = [None]
    else:
        sizes = range(lo, hi + 1)
    axes = [range(ranges[nm][0], ranges[nm][1] + 1) for nm in names]
    points = []
    for n in sizes:
        for values in product(*axes):
            pt = dict(zip(names, values))
            pt["n"] = pt[spec.size] if spec.size else n
            points.append(pt)
    points.sort(key=point_key)
    return points


def point_key(pt):
    return (pt["n"],) + tuple((k, pt[k]) for k in sorted(pt) if k != "n")


def delannoy(i: int, j: int) -> int:
    """Number of walks (0,0) -> (i,j) with unit steps E, N and NE."""
    if i < 0 or j < 0:
        raise ValueError("delannoy needs i, j >= 0")
    return sum(binomial(i, k) * binomial(j, k) * 2 ** k for k in range(min(i, j) + 1))

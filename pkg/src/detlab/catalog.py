"""Line-oriented catalog grammar for identity records.

One record per line, fields separated by `` | ``::

    I01 | ring=integer | n=1..8 | params=a:0..4,b:0..4 | entry=binom(2*i+2*a, j+b) | rhs=I01 | label=...

Field grammar (values never contain ``|``)::

    ring      integer | rational | q-poly | multivariate
    vars      comma list of ring variable names (multivariate only)
    n         LO..HI                   matrix sizes of the default grid
    size      c                        a parameter that fixes the matrix size (I04)
    params    name:LO..HI,...  or  -   integer parameter domains
    entry     see below
    rhs       closed-form key
    mode      check | calibration
    condense  yes                      index-shift condensation is meaningful
    label     free text

Entry rules come from a closed vocabulary::

    entry    := [ "sum[k=0..min(" lin "," lin ")] " ] product | special
    product  := factor { " * " factor }
    factor   := binom(lin, lin) | qbinom(lin, lin) | factorial(lin)
              | qint(lin) | qprod(lin) | BASE^(lin) | BASE^ATOM
    BASE     := nonnegative integer | ring variable name
    lin      := integer polynomial in i, j, k and parameters, e.g. ``i*y-i*x``
    special  := dyson(n, INT) | selberg(n, INT, INT) | v2coef(n)

Parsing then formatting a canonical line returns the identical line.
"""

import re
from dataclasses import dataclass, field

__all__ = [
    "CatalogError",
    "Entry",
    "Factor",
    "Lin",
    "Record",
    "format_catalog",
    "format_entry",
    "format_lin",
    "format_record",
    "parse_catalog",
    "parse_entry",
    "parse_lin",
    "parse_record",
]

FIELD_ORDER = ("ring", "vars", "n", "size", "params", "entry", "rhs", "mode", "condense", "label")
RINGS = ("integer", "rational", "q-poly", "multivariate")
FACTOR_FUNCS = ("binom", "qbinom", "factorial", "qint", "qprod")
SPECIALS = ("dyson", "selberg", "v2coef")

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*$")


class CatalogError(ValueError):
    """Malformed catalog text."""


# -- linear (integer polynomial) forms -------------------------------------

@dataclass(frozen=True)
class Lin:
    """Sum of coef * sym1 * sym2 ... ; order of terms is kept for round trips."""

    terms: tuple  # ((coef, (sym, ...)), ...)

    def symbols(self):
        return {s for _, syms in self.terms for s in syms}

    def __call__(self, env) -> int:
        total = 0
        for c, syms in self.terms:
            v = c
            for s in syms:
                v *= env[s]
            total += v
        return total


def parse_lin(text: str) -> Lin:
    s = text.replace(" ", "")
    if not s:
        raise CatalogError("empty linear form")
    if s[0] not in "+-":
        s = "+" + s
    pieces = re.findall(r"([+-])([^+-]+)", s)
    if "".join(a + b for a, b in pieces) != s:
        raise CatalogError(f"bad linear form {text!r}")
    terms = []
    for sign, body in pieces:
        coef = 1
        syms = []
        for tok in body.split("*"):
            if tok.isdigit():
                coef *= int(tok)
            elif _IDENT.match(tok):
                syms.append(tok)
            else:
                raise CatalogError(f"bad token {tok!r} in {text!r}")
        terms.append((-coef if sign == "-" else coef, tuple(syms)))
    return Lin(tuple(terms))


def format_lin(lin: Lin) -> str:
    out = []
    for idx, (c, syms) in enumerate(lin.terms):
        mag = abs(c)
        if syms:
            body = "*".join(syms) if mag == 1 else f"{mag}*" + "*".join(syms)
        else:
            body = str(mag)
        if c < 0:
            out.append("-" + body)
        else:
            out.append(body if idx == 0 else "+" + body)
    return "".join(out)


# -- entry rules ------------------------------------------------------------

@dataclass(frozen=True)
class Factor:
    kind: str  # one of FACTOR_FUNCS, or "pow"
    args: tuple  # Lin arguments; for "pow" -> (exponent,)
    base: object = None  # int or variable name for "pow"


@dataclass(frozen=True)
class Entry:
    factors: tuple = ()
    limit: tuple = None  # (Lin, Lin) when the entry is a k-sum up to min(...)
    special: str = None
    special_args: tuple = ()

    @property
    def is_sum(self) -> bool:
        return self.limit is not None


def _split_top(text: str, sep: str):
    """Split on sep at parenthesis depth 0."""
    out, depth, cur = [], 0, []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if depth == 0 and text.startswith(sep, i):
            out.append("".join(cur))
            cur = []
            i += len(sep)
            continue
        cur.append(ch)
        i += 1
    out.append("".join(cur))
    return out


def _parse_factor(text: str) -> Factor:
    text = text.strip()
    m = re.match(r"([a-z]+)\((.*)\)$", text)
    if m and m.group(1) in FACTOR_FUNCS:
        args = tuple(parse_lin(a) for a in _split_top(m.group(2), ","))
        want = 2 if m.group(1) in ("binom", "qbinom") else 1
        if len(args) != want:
            raise CatalogError(f"{m.group(1)} takes {want} argument(s): {text!r}")
        return Factor(m.group(1), args)
    m = re.match(r"([A-Za-z0-9_]+)\^(.+)$", text)
    if m:
        base = m.group(1)
        base = int(base) if base.isdigit() else base
        expo = m.group(2)
        if expo.startswith("(") and expo.endswith(")"):
            expo = expo[1:-1]
        return Factor("pow", (parse_lin(expo),), base)
    raise CatalogError(f"unknown factor {text!r}")


def _format_factor(f: Factor) -> str:
    if f.kind == "pow":
        ex = format_lin(f.args[0])
        if not re.fullmatch(r"[A-Za-z0-9_]+", ex):
            ex = f"({ex})"
        return f"{f.base}^{ex}"
    return f"{f.kind}(" + ", ".join(format_lin(a) for a in f.args) + ")"


def parse_entry(text: str) -> Entry:
    text = text.strip()
    m = re.match(r"([a-z0-9]+)\(n(?:, *(.*))?\)$", text)
    if m and m.group(1) in SPECIALS:
        args = tuple(int(a) for a in m.group(2).split(",")) if m.group(2) else ()
        return Entry(special=m.group(1), special_args=args)
    limit = None
    m = re.match(r"sum\[k=0\.\.min\((.*?)\)\]\s+(.*)$", text)
    if m:
        lims = _split_top(m.group(1), ",")
        if len(lims) != 2:
            raise CatalogError(f"bad summation limit in {text!r}")
        limit = (parse_lin(lims[0]), parse_lin(lims[1]))
        text = m.group(2)
    factors = tuple(_parse_factor(t) for t in _split_top(text, " * "))
    return Entry(factors=factors, limit=limit)


def format_entry(e: Entry) -> str:
    if e.special:
        return f"{e.special}(n" + "".join(f", {a}" for a in e.special_args) + ")"
    body = " * ".join(_format_factor(f) for f in e.factors)
    if e.limit is not None:
        return f"sum[k=0..min({format_lin(e.limit[0])},{format_lin(e.limit[1])})] " + body
    return body


# -- records ----------------------------------------------------------------

@dataclass(frozen=True)
class Record:
    id: str
    ring: str
    n: tuple  # (lo, hi)
    entry: Entry
    rhs: str
    params: tuple = ()  # ((name, lo, hi), ...)
    vars: tuple = ()
    size: str = None
    mode: str = "check"
    condense: bool = False
    label: str = ""
    extra: dict = field(default_factory=dict, compare=False, hash=False)


def _parse_range(text: str):
    m = re.fullmatch(r"(-?\d+)\.\.(-?\d+)", text.strip())
    if not m:
        raise CatalogError(f"bad range {text!r}")
    lo, hi = int(m.group(1)), int(m.group(2))
    if lo > hi:
        raise CatalogError(f"empty range {text!r}")
    return lo, hi


def parse_params(text: str):
    text = text.strip()
    if text in ("", "-"):
        return ()
    out = []
    for item in text.split(","):
        name, _, rng = item.partition(":")
        if not _IDENT.match(name.strip()):
            raise CatalogError(f"bad parameter name {name!r}")
        out.append((name.strip(),) + _parse_range(rng))
    return tuple(out)


def format_params(params) -> str:
    return ",".join(f"{n}:{lo}..{hi}" for n, lo, hi in params) or "-"


def split_fields(line: str):
    parts = [p.strip() for p in line.split("|")]
    ident = parts[0]
    if not ident or " " in ident:
        raise CatalogError(f"bad record id in {line!r}")
    fields = {}
    for p in parts[1:]:
        key, eq, value = p.partition("=")
        if not eq:
            raise CatalogError(f"field without '=': {p!r}")
        key = key.strip()
        if key not in FIELD_ORDER:
            raise CatalogError(f"unknown field {key!r}")
        if key in fields:
            raise CatalogError(f"duplicate field {key!r}")
        fields[key] = value.strip()
    return ident, fields


def parse_record(line: str) -> Record:
    ident, f = split_fields(line)
    for key in ("ring", "n", "entry", "rhs"):
        if key not in f:
            raise CatalogError(f"{ident}: missing field {key!r}")
    if f["ring"] not in RINGS:
        raise CatalogError(f"{ident}: unknown ring {f['ring']!r}")
    mode = f.get("mode", "check")
    if mode not in ("check", "calibration"):
        raise CatalogError(f"{ident}: unknown mode {mode!r}")
    return Record(
        id=ident,
        ring=f["ring"],
        n=_parse_range(f["n"]),
        entry=parse_entry(f["entry"]),
        rhs=f["rhs"],
        params=parse_params(f.get("params", "-")),
        vars=tuple(v for v in f.get("vars", "").split(",") if v),
        size=f.get("size") or None,
        mode=mode,
        condense=f.get("condense", "no") == "yes",
        label=f.get("label", ""),
    )


def format_record(r: Record) -> str:
    f = {"ring": r.ring}
    if r.vars:
        f["vars"] = ",".join(r.vars)
    f["n"] = f"{r.n[0]}..{r.n[1]}"
    if r.size:
        f["size"] = r.size
    f["params"] = format_params(r.params)
    f["entry"] = format_entry(r.entry)
    f["rhs"] = r.rhs
    if r.mode != "check":
        f["mode"] = r.mode
    if r.condense:
        f["condense"] = "yes"
    if r.label:
        f["label"] = r.label
    return " | ".join([r.id] + [f"{k}={f[k]}" for k in FIELD_ORDER if k in f])


def iter_lines(text: str):
    for raw in text.splitlines():
        line = raw.strip()
        if line and not line.startswith("#"):
            yield line


def parse_catalog(text: str):
    recs = [parse_record(line) for line in iter_lines(text)]
    seen = set()
    for r in recs:
        if r.id in seen:
            raise CatalogError(f"duplicate id {r.id}")
        seen.add(r.id)
    return recs


def format_catalog(records) -> str:
    return "".join(format_record(r) + "\n" for r in records)

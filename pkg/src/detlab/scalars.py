"""Canonical text rendering of exact scalars, and the matching parser."""

import re
from fractions import Fraction

from .exact import QPoly, normalize
from .laurent import MultiLaurent

__all__ = ["parse_scalar", "render"]


def render(x) -> str:
    """Canonical string: ints/fractions as ``p`` or ``p/q``, polynomials by term."""
    if isinstance(x, (int, Fraction)):
        return str(normalize(x))
    return str(x)


_SPLIT = re.compile(r" ([+-]) ")


def _parse_terms(text: str):
    text = text.strip()
    if text == "0":
        return []
    pieces = _SPLIT.split(text)
    terms = [(1, pieces[0])]
    for sign, body in zip(pieces[1::2], pieces[2::2]):
        terms.append((-1 if sign == "-" else 1, body))
    out = []
    for sign, body in terms:
        if body.startswith("-"):
            sign, body = -sign, body[1:]
        coef = Fraction(1)
        powers = {}
        for tok in body.split("*"):
            if re.fullmatch(r"\d+(/\d+)?", tok):
                coef *= Fraction(tok)
            else:
                m = re.fullmatch(r"([A-Za-z_][A-Za-z0-9_]*)(?:\^(-?\d+))?", tok)
                if not m:
                    raise ValueError(f"cannot parse term {body!r}")
                powers[m.group(1)] = powers.get(m.group(1), 0) + int(m.group(2) or 1)
        out.append((normalize(sign * coef), powers))
    return out


def parse_scalar(text: str, ring: str = "integer", names=()):
    """Inverse of :func:`render` for the given ring tag."""
    if ring in ("integer", "rational"):
        return normalize(Fraction(text.strip()))
    terms = _parse_terms(text)
    if ring == "q-poly":
        out = QPoly()
        for c, powers in terms:
            if set(powers) - {"q"}:
                raise ValueError(f"unexpected variable in q-polynomial {text!r}")
            out = out + QPoly.monomial(powers.get("q", 0), c)
        return out
    names = tuple(names)
    acc = {}
    for c, powers in terms:
        if set(powers) - set(names):
            raise ValueError(f"unexpected variables {set(powers) - set(names)} in {text!r}")
        e = tuple(powers.get(v, 0) for v in names)
        acc[e] = acc.get(e, 0) + c
    return MultiLaurent(acc, names)

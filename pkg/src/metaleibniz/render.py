"""Canonical text and JSON renderings of normal forms."""

from __future__ import annotations

import json
from fractions import Fraction

from .element import LeibnizElement
from .poly import CommPoly, format_monomial, format_poly, format_rational


def _signed(parts: list, coef: Fraction, body: str) -> None:
    a = abs(coef)
    text = body if a == 1 else f"{format_rational(a)}*{body}"
    if not parts:
        parts.append(text if coef > 0 else "-" + text)
    else:
        parts.append((" + " if coef > 0 else " - ") + text)


def render_text(u: LeibnizElement) -> str:
    """E.g. ``x1 + [x1,x2].(r3) - 1/2*[x2,x2].(r1^2)``; ``0`` for zero."""
    parts: list = []
    for i, c in enumerate(u.linear, 1):
        if c:
            _signed(parts, c, f"x{i}")
    for (i, j), p in u.quad_items():
        gen = f"[x{i},x{j}]"
        terms = p.sorted_terms()
        if len(terms) == 1:
            m, c = terms[0]
            mono = format_monomial(m)
            _signed(parts, c, f"{gen}.({mono})" if mono else gen)
        else:
            body = f"{gen}.({format_poly(p)})"
            parts.append(body if not parts else " + " + body)
    return "".join(parts) if parts else "0"


def poly_to_json(p: CommPoly) -> list:
    return [{"coef": format_rational(c), "exps": list(m)} for m, c in p.sorted_terms()]


def poly_from_json(data: list, n: int) -> CommPoly:
    return CommPoly(n, {tuple(t["exps"]): Fraction(t["coef"]) for t in data})


def element_to_json(u: LeibnizElement) -> dict:
    return {
        "n": u.n,
        "linear": [format_rational(c) for c in u.linear],
        "quad": [{"i": i, "j": j, "poly": poly_to_json(p)} for (i, j), p in u.quad_items()],
    }


def element_from_json(data: dict) -> LeibnizElement:
    n = data["n"]
    quad = {(q["i"], q["j"]): poly_from_json(q["poly"], n) for q in data["quad"]}
    return LeibnizElement(n, [Fraction(c) for c in data["linear"]], quad)


def dumps(obj) -> str:
    """Deterministic JSON text used for every machine-readable output."""
    return json.dumps(obj, separators=(", ", ": "))


def render(u: LeibnizElement, format: str = "text") -> str:
    if format == "text":
        return render_text(u)
    if format == "json":
        return dumps(element_to_json(u))
    raise ValueError(f"unknown format {format!r}")

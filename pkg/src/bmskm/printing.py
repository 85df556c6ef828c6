"""Text and JSON renderings of scalars and polynomials.

The text form is what :func:`bmskm.parser.parse_poly` reads back, so
``parse_poly(format_poly(f)) == f`` for every polynomial.
"""

from __future__ import annotations

from typing import TYPE_CHECKING

from .field import GaussianRational, format_rational

if TYPE_CHECKING:
    from .poly import BiPoly


def _monomial_text(j: int, k: int) -> str:
    parts = []
    if j:
        parts.append("s" if j == 1 else f"s^{j}")
    if k:
        parts.append("t" if k == 1 else f"t^{k}")
    return "*".join(parts)


def _signed_coefficient(c: GaussianRational) -> tuple[bool, str]:
    """Split ``c`` into (negative, magnitude text) for use inside a sum."""
    if not c.im:
        return c.re < 0, format_rational(abs(c.re))
    if not c.re:
        mag = abs(c.im)
        return c.im < 0, "i" if mag == 1 else f"{format_rational(mag)}*i"
    return False, f"({c})"


def format_term(c: GaussianRational, j: int, k: int) -> tuple[bool, str]:
    negative, coeff = _signed_coefficient(c)
    mono = _monomial_text(j, k)
    if not mono:
        return negative, coeff
    if coeff == "1":
        return negative, mono
    return negative, f"{coeff}*{mono}"


def format_poly(f: BiPoly) -> str:
    items = f.sorted_terms()
    if not items:
        return "0"
    out = []
    for idx, ((j, k), c) in enumerate(items):
        negative, text = format_term(c, j, k)
        if idx == 0:
            out.append(f"-{text}" if negative else text)
        else:
            out.append(f" - {text}" if negative else f" + {text}")
    return "".join(out)


def scalar_to_json(c: GaussianRational) -> dict:
    return {"re": format_rational(c.re), "im": format_rational(c.im)}


def poly_to_json(f: BiPoly) -> dict:
    return {
        "terms": [
            {"s": j, "t": k, "re": format_rational(c.re), "im": format_rational(c.im)}
            for (j, k), c in f.sorted_terms()
        ]
    }

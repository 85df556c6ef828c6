"""The BMS-Kac-Moody Lie algebra on the basis {L_m, M_m, S_m, I_m : m in Z}.

Nonzero brackets of basis elements::

    [L_m, L_n] = (n - m) L_{m+n}
    [L_m, M_n] = (n - m) M_{m+n}
    [L_m, S_n] = n S_{m+n}
    [L_m, I_n] = n I_{m+n}
    [M_m, I_n] = -n S_{m+n}

Every other pair of families (M-M, M-S, S-S, S-I, I-I) commutes.  The table
is stored for those five orientations only; a reversed pair is negated.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Union

from .errors import UnknownSubalgebra
from .field import ONE, GaussianRational, as_scalar

__all__ = [
    "FAMILIES",
    "SUBALGEBRAS",
    "Generator",
    "AlgebraElement",
    "L",
    "M",
    "S",
    "I",
    "bracket",
    "jacobi_defect",
    "in_subalgebra",
]

FAMILIES = ("L", "M", "S", "I")
_FAMILY_RANK = {f: r for r, f in enumerate(FAMILIES)}

SUBALGEBRAS: dict[str, frozenset[str]] = {
    "witt": frozenset("L"),
    "hv_i": frozenset("LI"),
    "hv_s": frozenset("LS"),
    "bms": frozenset("LM"),
    "ideal_si": frozenset("SI"),
}


@functools.total_ordering
@dataclass(frozen=True)
class Generator:
    """Basis symbol ``X_m``; ordered by family (L < M < S < I), then index."""

    family: str
    index: int

    def __post_init__(self):
        if self.family not in _FAMILY_RANK:
            raise ValueError(f"unknown generator family {self.family!r}")
        if not isinstance(self.index, int) or isinstance(self.index, bool):
            raise TypeError("generator index must be an int")

    def sort_key(self) -> tuple[int, int]:
        return (_FAMILY_RANK[self.family], self.index)

    def __lt__(self, other: Generator) -> bool:
        if not isinstance(other, Generator):
            return NotImplemented
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        return f"{self.family}[{self.index}]"

    def __repr__(self) -> str:
        return f"Generator({self.family!r}, {self.index})"


def L(m: int) -> Generator:
    return Generator("L", m)


def M(m: int) -> Generator:
    return Generator("M", m)


def S(m: int) -> Generator:
    return Generator("S", m)


def I(m: int) -> Generator:  # noqa: E743
    return Generator("I", m)


class AlgebraElement:
    """Finite linear combination of generators with Gaussian-rational coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Generator, object] | None = None):
        clean = {}
        for g, c in (terms or {}).items():
            c = as_scalar(c)
            if c:
                clean[g] = c
        self._terms = clean

    @classmethod
    def of(cls, g: Generator, c=1) -> AlgebraElement:
        return cls({g: c})

    @classmethod
    def zero(cls) -> AlgebraElement:
        return cls()

    @property
    def terms(self) -> dict[Generator, GaussianRational]:
        return dict(self._terms)

    def items(self) -> list[tuple[Generator, GaussianRational]]:
        return sorted(self._terms.items())

    def __iter__(self) -> Iterator[tuple[Generator, GaussianRational]]:
        return iter(self.items())

    def generators(self) -> list[Generator]:
        return sorted(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        other = _as_element(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other) -> AlgebraElement:
        other = _as_element(other)
        if other is None:
            return NotImplemented
        acc = dict(self._terms)
        for g, c in other._terms.items():
            acc[g] = acc[g] + c if g in acc else c
        return AlgebraElement(acc)

    __radd__ = __add__

    def __neg__(self) -> AlgebraElement:
        return AlgebraElement({g: -c for g, c in self._terms.items()})

    def __sub__(self, other) -> AlgebraElement:
        other = _as_element(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __mul__(self, c) -> AlgebraElement:
        c = as_scalar(c, strict=False)
        if c is None:
            return NotImplemented
        return AlgebraElement({g: v * c for g, v in self._terms.items()})

    __rmul__ = __mul__

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        out = []
        for idx, (g, c) in enumerate(self.items()):
            negative = c.is_real() and c.re < 0
            mag = -c if negative else c
            if mag == ONE:
                text = str(g)
            elif mag.is_real() or not mag.re:
                text = f"{mag}*{g}"
            else:
                text = f"({mag})*{g}"
            if idx == 0:
                out.append(f"-{text}" if negative else text)
            else:
                out.append(f" - {text}" if negative else f" + {text}")
        return "".join(out)

    def __repr__(self) -> str:
        return f"AlgebraElement({str(self)!r})"


ElementLike = Union[Generator, AlgebraElement]


def _as_element(x) -> AlgebraElement | None:
    if isinstance(x, AlgebraElement):
        return x
    if isinstance(x, Generator):
        return AlgebraElement.of(x)
    if isinstance(x, int) and x == 0:
        return AlgebraElement()
    return None


def basis_bracket(x: Generator, y: Generator) -> tuple[int, Generator] | None:
    """Bracket of two basis elements as ``(coefficient, generator)``, or None for zero."""
    pair = x.family + y.family
    m, n = x.index, y.index
    if pair == "LL":
        coeff, fam = n - m, "L"
    elif pair == "LM":
        coeff, fam = n - m, "M"
    elif pair == "LS":
        coeff, fam = n, "S"
    elif pair == "LI":
        coeff, fam = n, "I"
    elif pair == "MI":
        coeff, fam = -n, "S"
    elif pair in ("ML", "SL", "IL", "IM"):
        swapped = basis_bracket(y, x)
        if swapped is None:
            return None
        return -swapped[0], swapped[1]
    else:
        return None
    if coeff == 0:
        return None
    return coeff, Generator(fam, m + n)


def bracket(x: ElementLike, y: ElementLike) -> AlgebraElement:
    """Lie bracket, extended bilinearly from :func:`basis_bracket`."""
    x, y = _as_element(x), _as_element(y)
    if x is None or y is None:
        raise TypeError("bracket expects Generator or AlgebraElement arguments")
    acc: dict[Generator, GaussianRational] = {}
    for gx, cx in x._terms.items():
        for gy, cy in y._terms.items():
            value = basis_bracket(gx, gy)
            if value is None:
                continue
            coeff, g = value
            term = cx * cy * coeff
            acc[g] = acc[g] + term if g in acc else term
    return AlgebraElement(acc)


def jacobi_defect(x: ElementLike, y: ElementLike, z: ElementLike) -> AlgebraElement:
    """``[x,[y,z]] + [y,[z,x]] + [z,[x,y]]``; zero for a Lie algebra."""
    return bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y))


def in_subalgebra(x: ElementLike, name: str) -> bool:
    try:
        families = SUBALGEBRAS[name]
    except KeyError:
        raise UnknownSubalgebra(
            f"unknown subalgebra {name!r}; expected one of {', '.join(SUBALGEBRAS)}"
        ) from None
    x = _as_element(x)
    return all(g.family in families for g in x._terms)


def generators_in_range(index_range: int, families: Iterable[str] = FAMILIES) -> list[Generator]:
    """All ``X_m`` with ``X`` in ``families`` and ``|m| <= index_range``, canonically sorted."""
    fams = set(families)
    return [Generator(f, m) for f in FAMILIES if f in fams
            for m in range(-index_range, index_range + 1)]

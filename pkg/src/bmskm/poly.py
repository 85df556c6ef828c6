"""Sparse polynomials in C[s, t] with exact Gaussian-rational coefficients.

A :class:`BiPoly` maps exponent pairs ``(j, k)`` (the monomial ``s^j t^k``)
to nonzero :class:`~bmskm.field.GaussianRational` coefficients.  Besides the
ring operations it carries the three operators the module actions are built
from: the s-shift ``f(s, t) -> f(s - m, t)``, the t-derivative and the
t-difference quotient ``(p(t) - p(a)) / (t - a)``.

Terms are ordered graded-lexicographically with ``s > t``: higher total
degree first, ties broken by the higher power of ``s``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping

from .errors import NotUnivariateS, NotUnivariateT
from .field import ONE, ZERO, GaussianRational, as_scalar

__all__ = [
    "BiPoly",
    "DegreeBox",
    "monomial_key",
    "shift_s",
    "d_dt",
    "eval_t",
    "diff_quotient_t",
]

Monomial = tuple[int, int]


def monomial_key(mono: Monomial) -> tuple[int, int]:
    """Sort key realising the graded-lex order; larger key = larger monomial."""
    return (mono[0] + mono[1], mono[0])


@lru_cache(maxsize=None)
def _binomial_row(n: int) -> tuple[int, ...]:
    if n == 0:
        return (1,)
    prev = _binomial_row(n - 1)
    return (1,) + tuple(prev[r - 1] + prev[r] for r in range(1, n)) + (1,)


@dataclass(frozen=True)
class DegreeBox:
    max_s: int
    max_t: int

    def __post_init__(self):
        if self.max_s < 0 or self.max_t < 0:
            raise ValueError("DegreeBox bounds must be nonnegative")

    @property
    def dimension(self) -> int:
        return (self.max_s + 1) * (self.max_t + 1)

    def contains(self, mono: Monomial) -> bool:
        return mono[0] <= self.max_s and mono[1] <= self.max_t

    def monomials(self) -> list[Monomial]:
        """All monomials in the box, ascending graded-lex."""
        monos = [(j, k) for j in range(self.max_s + 1) for k in range(self.max_t + 1)]
        monos.sort(key=monomial_key)
        return monos

    def __str__(self) -> str:
        return f"{self.max_s},{self.max_t}"


def _add_into(acc: dict, key: Monomial, value: GaussianRational) -> None:
    old = acc.get(key)
    acc[key] = value if old is None else old + value


# Hot loops accumulate raw [re, im] component lists and build the
# GaussianRational objects once at the end.

def _raw_add(acc: dict, key: Monomial, re, im) -> None:
    slot = acc.get(key)
    if slot is None:
        acc[key] = [re, im]
    else:
        slot[0] += re
        slot[1] += im


def _from_raw(acc: dict) -> BiPoly:
    new = GaussianRational._new
    obj = object.__new__(BiPoly)
    obj._terms = {m: new(re, im) for m, (re, im) in acc.items() if re or im}
    obj._hash = None
    return obj


class BiPoly:
    """Immutable sparse element of C[s, t].

    >>> s, t = BiPoly.s(), BiPoly.t()
    >>> str((s + t) * (s - t))
    's^2 - t^2'
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, object] | None = None):
        clean: dict[Monomial, GaussianRational] = {}
        if terms:
            for (j, k), c in terms.items():
                j, k = int(j), int(k)
                if j < 0 or k < 0:
                    raise ValueError(f"negative exponent in monomial {(j, k)}")
                c = as_scalar(c)
                if c:
                    clean[(j, k)] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _wrap(cls, terms: dict) -> BiPoly:
        # trusted constructor: drops zeros, no coercion
        obj = object.__new__(cls)
        obj._terms = {m: c for m, c in terms.items() if c}
        obj._hash = None
        return obj

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls) -> BiPoly:
        return cls._wrap({})

    @classmethod
    def one(cls) -> BiPoly:
        return cls._wrap({(0, 0): ONE})

    @classmethod
    def constant(cls, c) -> BiPoly:
        return cls._wrap({(0, 0): as_scalar(c)})

    @classmethod
    def monomial(cls, j: int, k: int, c=1) -> BiPoly:
        return cls({(j, k): c})

    @classmethod
    def s(cls) -> BiPoly:
        return cls._wrap({(1, 0): ONE})

    @classmethod
    def t(cls) -> BiPoly:
        return cls._wrap({(0, 1): ONE})

    @classmethod
    def from_t_coeffs(cls, coeffs: Iterable) -> BiPoly:
        """Build ``sum c_k t^k`` from coefficients listed by ascending degree."""
        return cls({(0, k): c for k, c in enumerate(coeffs)})

    @classmethod
    def from_s_coeffs(cls, coeffs: Iterable) -> BiPoly:
        return cls({(j, 0): c for j, c in enumerate(coeffs)})

    # -- inspection ---------------------------------------------------------

    @property
    def terms(self) -> Mapping[Monomial, GaussianRational]:
        return MappingProxyType(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[tuple[Monomial, GaussianRational]]:
        return iter(self.sorted_terms())

    def sorted_terms(self) -> list[tuple[Monomial, GaussianRational]]:
        """Terms in descending graded-lex order (the printing order)."""
        return sorted(self._terms.items(), key=lambda item: monomial_key(item[0]), reverse=True)

    def coeff(self, j: int, k: int) -> GaussianRational:
        return self._terms.get((j, k), ZERO)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    @property
    def deg_s(self) -> int:
        """Degree in s; -1 for the zero polynomial."""
        return max((j for j, _ in self._terms), default=-1)

    @property
    def deg_t(self) -> int:
        """Degree in t; -1 for the zero polynomial."""
        return max((k for _, k in self._terms), default=-1)

    def is_constant(self) -> bool:
        return all(m == (0, 0) for m in self._terms)

    def is_t_only(self) -> bool:
        return all(j == 0 for j, _ in self._terms)

    def is_s_only(self) -> bool:
        return all(k == 0 for _, k in self._terms)

    def constant_term(self) -> GaussianRational:
        return self._terms.get((0, 0), ZERO)

    def leading_monomial(self) -> Monomial | None:
        if not self._terms:
            return None
        return max(self._terms, key=monomial_key)

    def fits(self, box: DegreeBox) -> bool:
        return all(j <= box.max_s and k <= box.max_t for j, k in self._terms)

    # -- ring operations ----------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, BiPoly):
            return self._terms == other._terms
        c = as_scalar(other, strict=False)
        if c is None:
            return NotImplemented
        return self._terms == BiPoly.constant(c)._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __neg__(self) -> BiPoly:
        return BiPoly._wrap({m: -c for m, c in self._terms.items()})

    def __pos__(self) -> BiPoly:
        return self

    def __add__(self, other) -> BiPoly:
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        if not other._terms:
            return self
        if not self._terms:
            return other
        acc = {m: [c.re, c.im] for m, c in self._terms.items()}
        for m, c in other._terms.items():
            _raw_add(acc, m, c.re, c.im)
        return _from_raw(acc)

    __radd__ = __add__

    def __sub__(self, other) -> BiPoly:
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> BiPoly:
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def scale(self, c) -> BiPoly:
        """Multiply every coefficient by the scalar ``c``."""
        if isinstance(c, int):
            if c == 0:
                return BiPoly.zero()
            if c == 1:
                return self
            return BiPoly._wrap({m: v * c for m, v in self._terms.items()})
        c = as_scalar(c)
        if not c:
            return BiPoly.zero()
        if c == ONE:
            return self
        return BiPoly._wrap({m: v * c for m, v in self._terms.items()})

    def __mul__(self, other) -> BiPoly:
        if isinstance(other, BiPoly):
            acc: dict = {}
            right = [(j, k, c.re, c.im) for (j, k), c in other._terms.items()]
            for (j1, k1), c1 in self._terms.items():
                a, b = c1.re, c1.im
                for j2, k2, c, d in right:
                    if b:
                        if d:
                            re, im = a * c - b * d, a * d + b * c
                        else:
                            re, im = a * c, b * c
                    else:
                        re, im = a * c, a * d
                    _raw_add(acc, (j1 + j2, k1 + k2), re, im)
            return _from_raw(acc)
        if isinstance(other, int) or as_scalar(other, strict=False) is not None:
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, n: int) -> BiPoly:
        if not isinstance(n, int) or n < 0:
            raise ValueError("BiPoly exponent must be a nonnegative integer")
        result, base = BiPoly.one(), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def mul_t_power(self, i: int) -> BiPoly:
        """Multiply by ``t^i``."""
        return BiPoly._wrap({(j, k + i): c for (j, k), c in self._terms.items()})

    def truncate_t(self, n: int) -> BiPoly:
        """Reduce modulo the ideal ``t^n C[s, t]`` (drop terms with t-degree >= n)."""
        return BiPoly._wrap({m: c for m, c in self._terms.items() if m[1] < n})

    def t_coefficient(self, i: int) -> BiPoly:
        """The s-polynomial multiplying ``t^i``."""
        return BiPoly._wrap({(j, 0): c for (j, k), c in self._terms.items() if k == i})

    # -- the module-action operators -----------------------------------------

    def shift_s(self, m: int) -> BiPoly:
        """Return ``f(s - m, t)`` by binomial expansion."""
        if m == 0 or not self._terms:
            return self
        acc: dict = {}
        neg_m = -m
        for (j, k), c in self._terms.items():
            re, im = c.re, c.im
            if j == 0:
                _raw_add(acc, (0, k), re, im)
                continue
            row = _binomial_row(j)
            power = 1
            # (s - m)^j = sum_r C(j, r) s^r (-m)^(j - r), walked from r = j down
            for r in range(j, -1, -1):
                n = row[r] * power
                _raw_add(acc, (r, k), re * n, im * n)
                power *= neg_m
        return _from_raw(acc)

    def d_dt(self) -> BiPoly:
        return BiPoly._wrap({(j, k - 1): c * k for (j, k), c in self._terms.items() if k})

    def d_ds(self) -> BiPoly:
        return BiPoly._wrap({(j - 1, k): c * j for (j, k), c in self._terms.items() if j})

    def _t_coeff_list(self) -> list[GaussianRational]:
        if not self.is_t_only():
            raise NotUnivariateT(f"polynomial {self} involves s")
        coeffs = [ZERO] * (self.deg_t + 1)
        for (_, k), c in self._terms.items():
            coeffs[k] = c
        return coeffs

    def eval_t(self, a) -> GaussianRational:
        """Evaluate a t-only polynomial at ``t = a`` (Horner)."""
        a = as_scalar(a)
        value = ZERO
        for c in reversed(self._t_coeff_list()):
            value = value * a + c
        return value

    def eval_s(self, a) -> GaussianRational:
        if not self.is_s_only():
            raise NotUnivariateS(f"polynomial {self} involves t")
        a = as_scalar(a)
        value = ZERO
        for j in range(self.deg_s, -1, -1):
            value = value * a + self.coeff(j, 0)
        return value

    def diff_quotient_t(self, a) -> BiPoly:
        """Exact polynomial ``(p(t) - p(a)) / (t - a)`` for t-only ``p``.

        Synthetic division of ``p`` by ``t - a``; the remainder it produces
        is ``p(a)``, which is exactly what gets subtracted, so the quotient is
        the answer.
        """
        a = as_scalar(a)
        coeffs = self._t_coeff_list()
        n = len(coeffs) - 1
        if n <= 0:
            return BiPoly.zero()
        quotient = [ZERO] * n
        carry = coeffs[n]
        for k in range(n - 1, -1, -1):
            quotient[k] = carry
            carry = coeffs[k] + carry * a
        # carry is now p(a), so p(t) - p(a) leaves no remainder
        direct = ZERO
        for k, c in enumerate(coeffs):
            direct = direct + c * a**k
        assert carry == direct, "synthetic division left a remainder"
        return BiPoly._wrap({(0, k): c for k, c in enumerate(quotient)})

    # -- display --------------------------------------------------------------

    def __str__(self) -> str:
        from .printing import format_poly

        return format_poly(self)

    def __repr__(self) -> str:
        return f"BiPoly({str(self)!r})"


def _as_poly(value) -> BiPoly | None:
    if isinstance(value, BiPoly):
        return value
    c = as_scalar(value, strict=False)
    if c is None:
        return None
    return BiPoly.constant(c)


def shift_s(f: BiPoly, m: int) -> BiPoly:
    return f.shift_s(m)


def d_dt(f: BiPoly) -> BiPoly:
    return f.d_dt()


def eval_t(p: BiPoly, a) -> GaussianRational:
    return p.eval_t(a)


def diff_quotient_t(p: BiPoly, a) -> BiPoly:
    return p.diff_quotient_t(a)

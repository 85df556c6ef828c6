"""The rank-one modules Phi(lambda, alpha, beta, rho, h) on C[s, t].

With ``f_m = f(s - m, t)`` and ``D = (h(t) - h(alpha)) / (t - alpha)``::

    L_m . f = lambda^m (s + h_m(t)) f_m - m lambda^m (t - m alpha) d/dt f_m
    M_m . f = lambda^m (t - m alpha) f_m
    S_m . f = lambda^m beta f_m
    I_m . f = lambda^m (rho - m beta D) f_m + m lambda^m beta d/dt f_m

where ``h_m(t) = m h(t) - m(m - 1) alpha D``.  ``L_0`` and ``M_0`` act as
multiplication by ``s`` and ``t``, which is how C[s, t] is identified with the
enveloping algebra of the Cartan part.

When ``alpha = beta = 0`` each ``t^i C[s, t]`` is a submodule and the layer
``t^i C[s,t] / t^(i+1) C[s,t]`` is represented by the s-polynomial ``g`` in
``t^i g(s)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .algebra import AlgebraElement, Generator, _as_element
from .errors import HNotUnivariate, LambdaZero, NotUnivariateS, QuotientUndefined
from .field import GaussianRational, as_scalar
from .poly import BiPoly

__all__ = [
    "PhiParams",
    "QuotientLevel",
    "h_m",
    "act_generator",
    "act_element",
    "act_word",
    "quotient_act",
    "is_irreducible",
    "quotient_irreducible",
]


@dataclass(frozen=True)
class PhiParams:
    lam: GaussianRational
    alpha: GaussianRational
    beta: GaussianRational
    rho: GaussianRational
    h: BiPoly

    def __post_init__(self):
        for name in ("lam", "alpha", "beta", "rho"):
            object.__setattr__(self, name, as_scalar(getattr(self, name)))
        h = self.h
        if not isinstance(h, BiPoly):
            h = BiPoly.constant(h)
            object.__setattr__(self, "h", h)
        if not self.lam:
            raise LambdaZero("lambda must be nonzero")
        if not h.is_t_only():
            raise HNotUnivariate(f"h must be a polynomial in t alone, got {h}")

    def replace(self, **changes) -> PhiParams:
        fields = {"lam": self.lam, "alpha": self.alpha, "beta": self.beta,
                  "rho": self.rho, "h": self.h}
        fields.update(changes)
        return PhiParams(**fields)

    def as_tuple(self) -> tuple:
        return (self.lam, self.alpha, self.beta, self.rho, self.h)

    def __str__(self) -> str:
        return (f"phi(lambda={self.lam},alpha={self.alpha},beta={self.beta},"
                f"rho={self.rho},h={self.h})")


@dataclass(frozen=True)
class QuotientLevel:
    i: int

    def __post_init__(self):
        if self.i < 0:
            raise ValueError("quotient level must be nonnegative")


@lru_cache(maxsize=4096)
def lambda_power(lam: GaussianRational, m: int) -> GaussianRational:
    return lam ** m


@lru_cache(maxsize=1024)
def h_difference_quotient(params: PhiParams) -> BiPoly:
    """``(h(t) - h(alpha)) / (t - alpha)`` as a polynomial."""
    return params.h.diff_quotient_t(params.alpha)


@lru_cache(maxsize=4096)
def h_m(params: PhiParams, m: int) -> BiPoly:
    """``m h(t) - m(m-1) alpha (h(t) - h(alpha)) / (t - alpha)``."""
    if m == 0:
        return BiPoly.zero()
    return params.h.scale(m) - h_difference_quotient(params).scale(params.alpha * (m * (m - 1)))


@lru_cache(maxsize=4096)
def _multipliers(params: PhiParams, family: str, m: int) -> tuple[BiPoly, BiPoly | None]:
    # g . f = A * f(s-m, t) + B * d/dt f(s-m, t); returns (A, B), B None when absent
    lam_m = lambda_power(params.lam, m)
    t = BiPoly.t()
    if family == "L":
        a = (BiPoly.s() + h_m(params, m)).scale(lam_m)
        b = (t - params.alpha * m).scale(-lam_m * m) if m else None
    elif family == "M":
        a = (t - params.alpha * m).scale(lam_m)
        b = None
    elif family == "S":
        a = BiPoly.constant(lam_m * params.beta)
        b = None
    else:
        a = (BiPoly.constant(params.rho)
             - h_difference_quotient(params).scale(params.beta * m)).scale(lam_m)
        b = BiPoly.constant(lam_m * params.beta * m) if m else None
    if b is not None and not b:
        b = None
    return a, b


def act_generator(params: PhiParams, g: Generator, f: BiPoly) -> BiPoly:
    """Action of a single basis element on ``f``."""
    a, b = _multipliers(params, g.family, g.index)
    shifted = f.shift_s(g.index)
    result = a * shifted
    if b is not None:
        result = result + b * shifted.d_dt()
    return result


def act_element(params: PhiParams, x: AlgebraElement | Generator, f: BiPoly) -> BiPoly:
    x = _as_element(x)
    result = BiPoly.zero()
    for g, c in x.items():
        result = result + act_generator(params, g, f).scale(c)
    return result


def act_word(params: PhiParams, word: Sequence[Generator], f: BiPoly) -> BiPoly:
    """Apply ``word`` to ``f``; the rightmost generator acts first."""
    for g in reversed(list(word)):
        f = act_generator(params, g, f)
    return f


def _require_quotient(params: PhiParams) -> None:
    if params.alpha or params.beta:
        raise QuotientUndefined("the t-power filtration needs alpha = beta = 0")


def quotient_act(params: PhiParams, level: QuotientLevel | int, g: Generator,
                 gbar: BiPoly) -> BiPoly:
    """Induced action on the layer ``t^i C[s,t] / t^(i+1) C[s,t]``.

    ``L_m`` sends ``g(s)`` to ``lambda^m (s + m(h(0) - i)) g(s - m)``, ``I_m``
    to ``lambda^m rho g(s - m)``; ``M_m`` and ``S_m`` act as zero.
    """
    _require_quotient(params)
    i = level.i if isinstance(level, QuotientLevel) else int(level)
    if not gbar.is_s_only():
        raise NotUnivariateS(f"layer representative must be a polynomial in s, got {gbar}")
    m = g.index
    lam_m = lambda_power(params.lam, m)
    if g.family == "L":
        h0 = params.h.eval_t(0)
        mult = BiPoly.s() + (h0 - i) * m
        return (mult * gbar.shift_s(m)).scale(lam_m)
    if g.family == "I":
        return gbar.shift_s(m).scale(lam_m * params.rho)
    return BiPoly.zero()


def is_irreducible(params: PhiParams) -> bool:
    return bool(params.alpha) or bool(params.beta)


def quotient_irreducible(params: PhiParams, level: QuotientLevel | int) -> bool:
    _require_quotient(params)
    i = level.i if isinstance(level, QuotientLevel) else int(level)
    return params.h.eval_t(0) != i or bool(params.rho)


def restricted_generators(generators: Iterable[Generator], families: Iterable[str]) -> list[Generator]:
    keep = set(families)
    return [g for g in generators if g.family in keep]


__all__ += ["lambda_power", "h_difference_quotient", "restricted_generators"]

"""Exact Gaussian rationals, the coefficient field Q(i).

Components are ``gmpy2.mpq`` values, which are always stored in lowest terms
with a positive denominator, so structural equality is field equality.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

from gmpy2 import mpq

__all__ = ["GaussianRational", "as_scalar", "format_rational", "ZERO", "ONE", "I"]

_MPQ_ZERO = mpq(0)
_MPQ_ONE = mpq(1)


def _to_mpq(value) -> mpq:
    if type(value) is type(_MPQ_ZERO):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(value, int):
        return mpq(value)
    if isinstance(value, Fraction):
        return mpq(value.numerator, value.denominator)
    if isinstance(value, Rational):
        return mpq(int(value.numerator), int(value.denominator))
    if isinstance(value, str):
        return mpq(Fraction(value.strip()))
    raise TypeError(f"cannot interpret {value!r} as a rational number")


def format_rational(q) -> str:
    """Render a rational as ``p`` or ``p/q``."""
    q = _to_mpq(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


class GaussianRational:
    """An element ``re + im*i`` of Q(i).

    Instances are immutable and hashable.  Mixed arithmetic with ``int`` and
    ``fractions.Fraction`` is supported.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        if isinstance(re, GaussianRational):
            if im:
                raise TypeError("cannot combine a GaussianRational with an imaginary part")
            self.re, self.im = re.re, re.im
            return
        self.re = _to_mpq(re)
        self.im = _to_mpq(im)

    @classmethod
    def _new(cls, re: mpq, im: mpq) -> GaussianRational:
        obj = object.__new__(cls)
        obj.re = re
        obj.im = im
        return obj

    # -- predicates ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.re and not self.im

    def is_real(self) -> bool:
        return not self.im

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    # -- arithmetic ---------------------------------------------------------

    def __neg__(self) -> GaussianRational:
        return GaussianRational._new(-self.re, -self.im)

    def __pos__(self) -> GaussianRational:
        return self

    def __add__(self, other) -> GaussianRational:
        other = as_scalar(other, strict=False)
        if other is None:
            return NotImplemented
        return GaussianRational._new(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other) -> GaussianRational:
        other = as_scalar(other, strict=False)
        if other is None:
            return NotImplemented
        return GaussianRational._new(self.re - other.re, self.im - other.im)

    def __rsub__(self, other) -> GaussianRational:
        other = as_scalar(other, strict=False)
        if other is None:
            return NotImplemented
        return GaussianRational._new(other.re - self.re, other.im - self.im)

    def __mul__(self, other) -> GaussianRational:
        if isinstance(other, int):
            return GaussianRational._new(self.re * other, self.im * other)
        other = as_scalar(other, strict=False)
        if other is None:
            return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        if not b:
            if not d:
                return GaussianRational._new(a * c, _MPQ_ZERO)
            return GaussianRational._new(a * c, a * d)
        if not d:
            return GaussianRational._new(a * c, b * c)
        return GaussianRational._new(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def inverse(self) -> GaussianRational:
        """Multiplicative inverse; raises ``ZeroDivisionError`` for zero."""
        a, b = self.re, self.im
        if not b:
            if not a:
                raise ZeroDivisionError("GaussianRational division by zero")
            return GaussianRational._new(_MPQ_ONE / a, _MPQ_ZERO)
        norm = a * a + b * b
        return GaussianRational._new(a / norm, -b / norm)

    def __truediv__(self, other) -> GaussianRational:
        other = as_scalar(other, strict=False)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other) -> GaussianRational:
        other = as_scalar(other, strict=False)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, exponent: int) -> GaussianRational:
        if not isinstance(exponent, int):
            return NotImplemented
        base = self
        if exponent < 0:
            base, exponent = self.inverse(), -exponent
        result = ONE
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def conjugate(self) -> GaussianRational:
        return GaussianRational._new(self.re, -self.im)

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        other = as_scalar(other, strict=False)
        if other is None:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self) -> int:
        # agrees with hash(int) and hash(Fraction) for real values
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    # -- display ------------------------------------------------------------

    def __repr__(self) -> str:
        return f"GaussianRational({format_rational(self.re)!r}, {format_rational(self.im)!r})"

    def __str__(self) -> str:
        re, im = self.re, self.im
        if not im:
            return format_rational(re)
        if im == 1:
            imag = "i"
        elif im == -1:
            imag = "-i"
        else:
            imag = f"{format_rational(im)}*i"
        if not re:
            return imag
        if imag.startswith("-"):
            return f"{format_rational(re)}-{imag[1:]}"
        return f"{format_rational(re)}+{imag}"

    def re_str(self) -> str:
        return format_rational(self.re)

    def im_str(self) -> str:
        return format_rational(self.im)


def as_scalar(value, strict: bool = True) -> GaussianRational | None:
    """Coerce ``value`` to a :class:`GaussianRational`.

    With ``strict=False`` an unsupported type yields ``None`` instead of
    ``TypeError``, which lets the arithmetic dunders return ``NotImplemented``.
    """
    if isinstance(value, GaussianRational):
        return value
    if isinstance(value, complex):
        if strict:
            raise TypeError("floating-point complex numbers are not exact scalars")
        return None
    try:
        return GaussianRational._new(_to_mpq(value), _MPQ_ZERO)
    except (TypeError, ValueError):
        if strict:
            raise
        return None


ZERO = GaussianRational._new(_MPQ_ZERO, _MPQ_ZERO)
ONE = GaussianRational._new(_MPQ_ONE, _MPQ_ZERO)
I = GaussianRational._new(_MPQ_ZERO, _MPQ_ONE)

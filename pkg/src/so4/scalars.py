"""Exact arithmetic over the Gaussian rationals Q(i).

A Scalar is a complex number whose real and imaginary parts are rational,
kept exact with arbitrary-precision ``fractions.Fraction`` parts.  This is
the ground field for every linear-algebra computation in the package; no
floating point appears anywhere.
"""

from __future__ import annotations

import math
import re as _re
from fractions import Fraction

RationalLike = int | Fraction


_ZERO_F = Fraction(0)


def _as_fraction(x: RationalLike) -> Fraction:
    if type(x) is Fraction:
        return x
    if isinstance(x, bool) or not isinstance(x, (int, Fraction)):
        raise TypeError(f"expected an exact rational, got {type(x).__name__}")
    return Fraction(x)


class Scalar:
    """A Gaussian rational re + im*i with exact Fraction parts."""

    __slots__ = ("re", "im")

    def __init__(self, re: RationalLike = 0, im: RationalLike = 0):
        object.__setattr__(self, "re", _as_fraction(re))
        object.__setattr__(self, "im", _as_fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    # -- field operations ---------------------------------------------------
    # Real values dominate in practice, so pure-real cases skip the
    # Fraction machinery for the vanishing imaginary parts.

    def __add__(self, other) -> "Scalar":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if not self.im and not other.im:
            return _raw(self.re + other.re, _ZERO_F)
        return _raw(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other) -> "Scalar":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if not self.im and not other.im:
            return _raw(self.re - other.re, _ZERO_F)
        return _raw(self.re - other.re, self.im - other.im)

    def __rsub__(self, other) -> "Scalar":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other) -> "Scalar":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if not self.im:
            if not self.re:
                return ZERO
            if not other.im:
                return _raw(self.re * other.re, _ZERO_F)
            return _raw(self.re * other.re, self.re * other.im)
        if not other.im:
            if not other.re:
                return ZERO
            return _raw(self.re * other.re, self.im * other.re)
        return _raw(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Scalar":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if not other.im:
            if not other.re:
                raise ZeroDivisionError("division by zero in Q(i)")
            if not self.im:
                return _raw(self.re / other.re, _ZERO_F)
            return _raw(self.re / other.re, self.im / other.re)
        n = other.re * other.re + other.im * other.im
        return _raw(
            (self.re * other.re + self.im * other.im) / n,
            (self.im * other.re - self.re * other.im) / n,
        )

    def __rtruediv__(self, other) -> "Scalar":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __neg__(self) -> "Scalar":
        return _raw(-self.re, -self.im)

    def __pos__(self) -> "Scalar":
        return self

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self) -> int:
        return hash((self.re, self.im))

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    # -- helpers ------------------------------------------------------------

    def conjugate(self) -> "Scalar":
        return _raw(self.re, -self.im)

    def is_zero(self) -> bool:
        return not self.re and not self.im

    def __repr__(self) -> str:
        return f"Scalar({render_scalar(self)!r})"

    def __str__(self) -> str:
        return render_scalar(self)


def _raw(re: Fraction, im: Fraction) -> Scalar:
    s = object.__new__(Scalar)
    object.__setattr__(s, "re", re)
    object.__setattr__(s, "im", im)
    return s


def _coerce(x) -> Scalar | None:
    if isinstance(x, Scalar):
        return x
    if isinstance(x, bool):
        return None
    if isinstance(x, (int, Fraction)):
        return Scalar(x)
    return None


ZERO = Scalar(0)
ONE = Scalar(1)
I = Scalar(0, 1)


# -- text form ---------------------------------------------------------------
#
# Grammar (whitespace-insensitive):   [sign] rat [sign rat 'i']  |  [sign] [rat] 'i'
# with rat = int['/'int].  A missing coefficient before 'i' means 1.

_RAT = r"\d+(?:/\d+)?"
_RE_REAL = _re.compile(rf"^([+-]?{_RAT})$")
_RE_IMAG = _re.compile(rf"^([+-]?)({_RAT})?i$")
_RE_BOTH = _re.compile(rf"^([+-]?{_RAT})([+-])({_RAT})?i$")


def _frac(text: str) -> Fraction:
    try:
        return Fraction(text)
    except ZeroDivisionError:
        raise ValueError(f"zero denominator in {text!r}") from None


def parse_scalar(text: str) -> Scalar:
    """Parse the canonical text form, e.g. '3/2-1/2i', '0', 'i', '-2+i'."""
    compact = "".join(text.split())
    if not compact:
        raise ValueError("empty scalar")
    m = _RE_REAL.match(compact)
    if m:
        return Scalar(_frac(m.group(1)))
    m = _RE_IMAG.match(compact)
    if m:
        coeff = _frac(m.group(2)) if m.group(2) else Fraction(1)
        if m.group(1) == "-":
            coeff = -coeff
        return Scalar(0, coeff)
    m = _RE_BOTH.match(compact)
    if m:
        re_part = _frac(m.group(1))
        coeff = _frac(m.group(3)) if m.group(3) else Fraction(1)
        if m.group(2) == "-":
            coeff = -coeff
        return Scalar(re_part, coeff)
    raise ValueError(f"malformed scalar {text!r}")


def _render_imag(im: Fraction) -> str:
    if im == 1:
        return "i"
    if im == -1:
        return "-i"
    return f"{im}i"


def render_scalar(z: Scalar) -> str:
    """Canonical text: reduced fractions, no superfluous signs, '0' for zero."""
    if z.re == 0 and z.im == 0:
        return "0"
    if z.im == 0:
        return str(z.re)
    if z.re == 0:
        return _render_imag(z.im)
    sign = "+" if z.im > 0 else "-"
    mag = abs(z.im)
    imag = "i" if mag == 1 else f"{mag}i"
    return f"{z.re}{sign}{imag}"


# -- exact square roots --------------------------------------------------------


def _frac_sqrt(f: Fraction) -> Fraction | None:
    """Exact square root of a nonnegative rational, or None if irrational."""
    if f < 0:
        return None
    n = math.isqrt(f.numerator)
    d = math.isqrt(f.denominator)
    if n * n != f.numerator or d * d != f.denominator:
        return None
    return Fraction(n, d)


def sqrt_in_field(z: Scalar) -> Scalar | None:
    """An exact square root of z inside Q(i), or None if no such root exists.

    The returned root is normalized to have positive imaginary part, or,
    when purely real, to be positive.
    """
    if z.is_zero():
        return ZERO
    if z.im == 0:
        if z.re > 0:
            s = _frac_sqrt(z.re)
            return Scalar(s) if s is not None else None
        s = _frac_sqrt(-z.re)
        return Scalar(0, s) if s is not None else None
    # u + vi with u^2 = (re + |z|)/2, v = im / 2u
    norm = _frac_sqrt(z.re * z.re + z.im * z.im)
    if norm is None:
        return None
    u = _frac_sqrt((z.re + norm) / 2)
    if u is None or u == 0:
        return None
    v = z.im / (2 * u)
    root = Scalar(u, v)
    if v < 0 or (v == 0 and u < 0):
        root = -root
    return root

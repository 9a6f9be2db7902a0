"""Exact coefficients: rationals and Gaussian rationals Q(i).

Rationals are :class:`fractions.Fraction`, which is already reduced with a
positive denominator.  :class:`GaussRational` adds a square root of -1 on top.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational as _RationalABC

__all__ = [
    "GaussRational",
    "ZeroDivisionInField",
    "as_scalar",
    "binom",
    "parse_scalar",
    "ZERO",
    "ONE",
    "I",
]


class ZeroDivisionInField(ZeroDivisionError):
    """Raised when inverting the zero element of Q(i)."""


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, _RationalABC)):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


class GaussRational:
    """An element re + im*i of Q(i), immutable and hashable."""

    __slots__ = ("re", "im", "_hash")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", _frac(re))
        object.__setattr__(self, "im", _frac(im))
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("GaussRational is immutable")

    # construction helpers -------------------------------------------------
    @classmethod
    def _raw(cls, re: Fraction, im: Fraction) -> "GaussRational":
        obj = object.__new__(cls)
        object.__setattr__(obj, "re", re)
        object.__setattr__(obj, "im", im)
        object.__setattr__(obj, "_hash", None)
        return obj

    # arithmetic ------------------------------------------------------------
    def __add__(self, other):
        other = as_scalar(other, strict=False)
        if other is NotImplemented:
            return NotImplemented
        return GaussRational._raw(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = as_scalar(other, strict=False)
        if other is NotImplemented:
            return NotImplemented
        return GaussRational._raw(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = as_scalar(other, strict=False)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = as_scalar(other, strict=False)
        if other is NotImplemented:
            return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        if not b and not d:
            return GaussRational._raw(a * c, b)
        return GaussRational._raw(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __neg__(self):
        return GaussRational._raw(-self.re, -self.im)

    def __pos__(self):
        return self

    def inverse(self) -> "GaussRational":
        n = self.re * self.re + self.im * self.im
        if not n:
            raise ZeroDivisionInField("inverse of 0 in Q(i)")
        return GaussRational._raw(self.re / n, -self.im / n)

    def __truediv__(self, other):
        other = as_scalar(other, strict=False)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = as_scalar(other, strict=False)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self) -> "GaussRational":
        return GaussRational._raw(self.re, -self.im)

    # comparison ------------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, GaussRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return not self.im and self.re == other
        return NotImplemented

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash(self.re) if not self.im else hash((self.re, self.im))
            object.__setattr__(self, "_hash", h)
        return h

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def is_real(self) -> bool:
        return not self.im

    # text --------------------------------------------------------------------
    def __repr__(self):
        return f"GaussRational({self})"

    def __str__(self):
        re_, im_ = self.re, self.im
        if not im_:
            return str(re_)
        im_part = "I" if im_ == 1 else "-I" if im_ == -1 else f"{im_}*I"
        if not re_:
            return im_part
        if im_part.startswith("-"):
            return f"{re_}{im_part}"
        return f"{re_}+{im_part}"


ZERO = GaussRational._raw(Fraction(0), Fraction(0))
ONE = GaussRational._raw(Fraction(1), Fraction(0))
I = GaussRational._raw(Fraction(0), Fraction(1))


def as_scalar(x, strict: bool = True):
    """Coerce ints, Fractions and GaussRationals to :class:`GaussRational`."""
    if isinstance(x, GaussRational):
        return x
    if isinstance(x, (int, Fraction)):
        return GaussRational._raw(Fraction(x), Fraction(0))
    if strict:
        raise TypeError(f"cannot use {x!r} as an exact scalar")
    return NotImplemented


def binom(q, i: int) -> Fraction:
    """Generalized binomial q(q-1)...(q-i+1)/i! for rational q."""
    if i < 0:
        raise ValueError("binom needs i >= 0")
    q = _frac(q)
    num = Fraction(1)
    for k in range(i):
        num *= q - k
    fact = 1
    for k in range(2, i + 1):
        fact *= k
    return num / fact


_RAT = r"[+-]?\d+(?:/\d+)?"
_SCALAR_RE = re.compile(
    rf"^(?:(?P<re>{_RAT})(?P<im>[+-](?:\d+(?:/\d+)?\*?)?I)?|(?P<imonly>[+-]?(?:\d+(?:/\d+)?\*?)?I))$"
)


def _parse_im(text: str) -> Fraction:
    body = text[:-1].rstrip("*")
    if body in ("", "+"):
        return Fraction(1)
    if body == "-":
        return Fraction(-1)
    return Fraction(body)


def parse_scalar(text: str) -> GaussRational:
    """Parse the report form ``a/b+c/d*I`` (zero parts may be omitted)."""
    s = text.replace(" ", "")
    m = _SCALAR_RE.match(s)
    if not m:
        raise ValueError(f"malformed scalar: {text!r}")
    if m.group("imonly") is not None:
        return GaussRational(0, _parse_im(m.group("imonly")))
    im = _parse_im(m.group("im")) if m.group("im") else Fraction(0)
    return GaussRational(Fraction(m.group("re")), im)

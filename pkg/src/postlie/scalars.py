"""Exact scalars over Q and Q(i).

A scalar is a Gaussian rational re + im*i with arbitrary-precision
rational parts.  All arithmetic is exact; there is no floating point
anywhere in this package.  The text grammar (used by every file format
and by the CLI) is:

    R        real part only           e.g.  -1/2, 7, 0
    Ri       imaginary part only      e.g.  i, -i, 3/2i
    R+Si     both parts               e.g.  1/2+1/2i, 1-i

where R and S are optionally signed integers or fractions p/q with
q > 0.  Canonical output omits zero parts, prints the imaginary part
last and writes ``i`` rather than ``1i``.

Internally a scalar is the integer triple (a, b, d) with value
(a + b*i)/d, d > 0 and gcd(a, b, d) = 1, which keeps the heavy
arithmetic in plain integers with one gcd per operation.
"""

from __future__ import annotations

import re as _re
from fractions import Fraction
from math import gcd

__all__ = ["Scalar", "ScalarParseError", "ZERO", "ONE", "I", "sc", "parse_scalar"]


class ScalarParseError(ValueError):
    """Raised when a scalar string does not conform to the grammar."""


_RAT = r"-?\d+(?:/\d+)?"
_RE_REAL = _re.compile(rf"^({_RAT})$")
_RE_IMAG = _re.compile(rf"^(-?)((?:\d+(?:/\d+)?)?)i$")
_RE_BOTH = _re.compile(rf"^({_RAT})([+-])((?:\d+(?:/\d+)?)?)i$")


def _frac(text: str) -> Fraction:
    if "/" in text:
        num, den = text.split("/", 1)
        if int(den) == 0:
            raise ScalarParseError("zero denominator in %r" % text)
        return Fraction(int(num), int(den))
    return Fraction(int(text))


def _raw(a: int, b: int, d: int) -> "Scalar":
    s = object.__new__(Scalar)
    object.__setattr__(s, "a", a)
    object.__setattr__(s, "b", b)
    object.__setattr__(s, "d", d)
    return s


def _build(a: int, b: int, d: int) -> "Scalar":
    """Normalise (a + b i)/d to canonical form; d must be nonzero."""
    if d < 0:
        a, b, d = -a, -b, -d
    g = gcd(gcd(a, b), d)
    if g > 1:
        a //= g
        b //= g
        d //= g
    return _raw(a, b, d)


class Scalar:
    """An element of Q(i), kept in canonical (lowest-terms) form."""

    __slots__ = ("a", "b", "d")

    def __init__(self, re=0, im=0):
        if isinstance(re, int) and isinstance(im, int):
            s = _raw(re, im, 1)
        else:
            re = Fraction(re)
            im = Fraction(im)
            d = re.denominator * im.denominator // gcd(re.denominator, im.denominator)
            s = _build(re.numerator * (d // re.denominator),
                       im.numerator * (d // im.denominator), d)
        object.__setattr__(self, "a", s.a)
        object.__setattr__(self, "b", s.b)
        object.__setattr__(self, "d", s.d)

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    @property
    def re(self) -> Fraction:
        return Fraction(self.a, self.d)

    @property
    def im(self) -> Fraction:
        return Fraction(self.b, self.d)

    # -- constructors -------------------------------------------------

    @staticmethod
    def parse(text: str) -> "Scalar":
        s = text.strip()
        m = _RE_REAL.match(s)
        if m:
            return Scalar(_frac(m.group(1)))
        m = _RE_IMAG.match(s)
        if m:
            mag = _frac(m.group(2)) if m.group(2) else Fraction(1)
            return Scalar(0, -mag if m.group(1) == "-" else mag)
        m = _RE_BOTH.match(s)
        if m:
            mag = _frac(m.group(3)) if m.group(3) else Fraction(1)
            return Scalar(_frac(m.group(1)), -mag if m.group(2) == "-" else mag)
        raise ScalarParseError("cannot parse scalar %r" % text)

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        d1, d2 = self.d, other.d
        if d1 == d2:
            return _build(self.a + other.a, self.b + other.b, d1)
        return _build(self.a * d2 + other.a * d1, self.b * d2 + other.b * d1, d1 * d2)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        d1, d2 = self.d, other.d
        if d1 == d2:
            return _build(self.a - other.a, self.b - other.b, d1)
        return _build(self.a * d2 - other.a * d1, self.b * d2 - other.b * d1, d1 * d2)

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        b1, b2 = self.b, other.b
        if b1 == 0 and b2 == 0:
            return _build(self.a * other.a, 0, self.d * other.d)
        return _build(self.a * other.a - b1 * b2,
                      self.a * b2 + b1 * other.a,
                      self.d * other.d)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other.b == 0:
            if other.a == 0:
                raise ZeroDivisionError("scalar division by zero")
            return _build(self.a * other.d, self.b * other.d, self.d * other.a)
        norm = other.a * other.a + other.b * other.b
        return _build((self.a * other.a + self.b * other.b) * other.d,
                      (self.b * other.a - self.a * other.b) * other.d,
                      self.d * norm)

    def __rtruediv__(self, other):
        return _coerce(other) / self

    def __neg__(self):
        return _raw(-self.a, -self.b, self.d)

    def conjugate(self) -> "Scalar":
        return _raw(self.a, -self.b, self.d)

    # -- comparison / hashing -------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.a == other.a and self.b == other.b and self.d == other.d
        if isinstance(other, int):
            return self.d == 1 and self.b == 0 and self.a == other
        if isinstance(other, Fraction):
            return self.b == 0 and self.a == other.numerator and self.d == other.denominator
        return NotImplemented

    def __hash__(self):
        return hash((self.a, self.b, self.d))

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def is_real(self) -> bool:
        return self.b == 0

    # -- formatting ------------------------------------------------------

    def __str__(self):
        re_, im_ = self.re, self.im
        if im_ == 0:
            return str(re_)
        if im_ == 1:
            imtxt = "i"
        elif im_ == -1:
            imtxt = "-i"
        else:
            imtxt = "%si" % im_
        if re_ == 0:
            return imtxt
        sign = "+" if im_ > 0 else ""
        return "%s%s%s" % (re_, sign, imtxt)

    def __repr__(self):
        return "Scalar(%s)" % self


def _coerce(value) -> Scalar:
    if isinstance(value, Scalar):
        return value
    if isinstance(value, (int, Fraction)):
        return Scalar(value)
    raise TypeError("cannot mix Scalar with %r" % type(value).__name__)


def sc(re=0, im=0) -> Scalar:
    """Shorthand constructor: sc(1, 2) == 1 + 2i, sc("-1/2") parses text."""
    if isinstance(re, str):
        if im != 0:
            raise ValueError("sc(text) takes no imaginary argument")
        return Scalar.parse(re)
    return Scalar(re, im)


def parse_scalar(text: str) -> Scalar:
    return Scalar.parse(text)


ZERO = Scalar(0)
ONE = Scalar(1)
I = Scalar(0, 1)

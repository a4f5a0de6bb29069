"""Exact Gaussian rationals a + b*i with a, b in Q.

Backed by :class:`fractions.Fraction`; no value is ever rounded.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational


class GaussianRational:
    __slots__ = ("re", "im")

    re: Fraction
    im: Fraction

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @classmethod
    def coerce(cls, value) -> GaussianRational:
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, (int, Rational)):
            return cls(value, 0)
        if isinstance(value, complex):
            # only for exactly representable literals, e.g. 1+2j
            return cls(Fraction(value.real), Fraction(value.imag))
        if isinstance(value, float):
            return cls(Fraction(value), 0)
        if isinstance(value, str):
            return parse_gaussian(value)
        raise TypeError(f"cannot convert {type(value).__name__} to GaussianRational")

    # arithmetic ---------------------------------------------------------

    def __add__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(
            self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        den = o.norm()
        if den == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        num = self * o.conjugate()
        return GaussianRational(num.re / den, num.im / den)

    def __rtruediv__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return o / self

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return GaussianRational(1) / (self**-exponent)
        result = GaussianRational(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def conjugate(self) -> GaussianRational:
        return GaussianRational(self.re, -self.im)

    def norm(self) -> Fraction:
        """|x|^2, exact."""
        return self.re * self.re + self.im * self.im

    def __abs__(self) -> float:
        return abs(complex(self))

    # comparison ---------------------------------------------------------

    def __eq__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return self.re != 0 or self.im != 0

    def is_real(self) -> bool:
        return self.im == 0

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    # text ---------------------------------------------------------------

    def __repr__(self):
        return f"GaussianRational({self.re!s}, {self.im!s})"

    def __str__(self):
        return format_gaussian(self)


def _frac_text(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_gaussian(x: GaussianRational) -> str:
    """Text such as ``3``, ``-1/2``, ``2i``, ``-3/2+1/2i``.

    The output is accepted by the polynomial parser (inside parentheses when
    both parts are nonzero).
    """
    if x.im == 0:
        return _frac_text(x.re)
    mag = abs(x.im)
    im_text = "i" if mag == 1 else f"{_frac_text(mag)}i"
    if x.re == 0:
        return im_text if x.im > 0 else f"-{im_text}"
    sign = "+" if x.im > 0 else "-"
    return f"{_frac_text(x.re)}{sign}{im_text}"


def parse_gaussian(text: str) -> GaussianRational:
    """Parse a single coefficient or coordinate, e.g. ``1+2i`` or ``-3/2``."""
    from .mixedpoly import parse

    poly = parse(text.strip(), nvars=1)
    if not poly.terms:
        return GaussianRational(0)
    if len(poly.terms) != 1 or poly.terms[0].degree != 0:
        from .errors import ParseError

        raise ParseError(f"not a constant: {text!r}")
    return poly.terms[0].coeff


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)

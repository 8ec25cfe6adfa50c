"""
Exact scalars.

Rationals are :class:`fractions.Fraction` (always in lowest terms with a
positive denominator). :class:`ComplexRational` pairs two of them for the
hermitian case.
"""
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Union

from alphaperm.utils.exceptions.codec import ParseError

Rational = Fraction


class ComplexRational:
    """re + i*im with exact rational parts"""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    @staticmethod
    def _coerce(other):
        if isinstance(other, ComplexRational):
            return other
        if isinstance(other, (int, Fraction)):
            return ComplexRational(other, 0)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return ComplexRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return ComplexRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return ComplexRational(self.re * other, self.im * other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return ComplexRational(self.re * other.re - self.im * other.im,
                               self.re * other.im + self.im * other.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("complex rational division by zero")
            return ComplexRational(self.re / other, self.im / other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        norm = other.abs2()
        if norm == 0:
            raise ZeroDivisionError("complex rational division by zero")
        num = self * other.conjugate()
        return ComplexRational(num.re / norm, num.im / norm)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other / self

    def __neg__(self):
        return ComplexRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return ComplexRational(1) / (self ** -exponent)
        result, base = ComplexRational(1), self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, ComplexRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def conjugate(self) -> 'ComplexRational':
        return ComplexRational(self.re, -self.im)

    def abs2(self) -> Fraction:
        """|z|^2, a nonnegative rational"""
        return self.re * self.re + self.im * self.im

    def __repr__(self):
        return f"ComplexRational({self.re}, {self.im})"

    def __str__(self):
        return f"{self.re}{'+' if self.im >= 0 else '-'}{abs(self.im)}i"


Scalar = Union[Fraction, ComplexRational]


def is_complex(value) -> bool:
    return isinstance(value, ComplexRational)


def conjugate(value):
    return value.conjugate() if isinstance(value, ComplexRational) else value


def real_if_possible(value):
    """Collapse a complex value with zero imaginary part to a Fraction"""
    if isinstance(value, ComplexRational) and value.im == 0:
        return value.re
    return value


def parse_rational(value) -> Fraction:
    """Parse an int, a "p/q" string or an exact rational"""
    if isinstance(value, bool):
        raise ParseError("booleans are not scalars", value)
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, _RationalABC):
        return Fraction(value.numerator, value.denominator)
    if isinstance(value, str):
        text = value.strip()
        try:
            if "/" in text:
                num, den = text.split("/")
                den_int = int(den)
                if den_int == 0:
                    raise ParseError("zero denominator", value)
                return Fraction(int(num), den_int)
            return Fraction(int(text))
        except ValueError:
            raise ParseError("expected an integer or 'p/q'", value)
    raise ParseError(f"unsupported scalar type {type(value).__name__}", value)


def parse_scalar(value) -> Scalar:
    """Parse the JSON scalar encoding: int, "p/q", or [re, im]"""
    if isinstance(value, ComplexRational):
        return value
    if isinstance(value, (list, tuple)):
        if len(value) != 2:
            raise ParseError("complex entries are [re, im]", value)
        return ComplexRational(parse_rational(value[0]), parse_rational(value[1]))
    return parse_rational(value)


def encode_rational(value: Fraction) -> Union[int, str]:
    """Integers stay JSON ints, everything else becomes "p/q"."""
    value = Fraction(value)
    if value.denominator == 1:
        return value.numerator
    return f"{value.numerator}/{value.denominator}"


def encode_scalar(value: Scalar):
    if isinstance(value, ComplexRational):
        return [encode_rational(value.re), encode_rational(value.im)]
    return encode_rational(value)


def format_scalar(value: Scalar):
    """String form used in reports: "p/q" (or ["p/q", "p/q"])"""
    if isinstance(value, ComplexRational):
        return [str(value.re), str(value.im)]
    return str(Fraction(value))


def to_float(value: Scalar) -> float:
    if isinstance(value, ComplexRational):
        if value.im != 0:
            raise ValueError("cannot convert a non-real complex rational to float")
        return float(value.re)
    return float(value)

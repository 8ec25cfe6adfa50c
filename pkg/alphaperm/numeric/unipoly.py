from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple, Union

from alphaperm.numeric.scalar import parse_rational
from alphaperm.utils.exceptions.polynomial import ZeroPolynomialError

Number = Union[int, Fraction]


class UniPoly:
    """Univariate polynomial with rational coefficients, ascending degree."""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Iterable[Number] = ()):
        coeffs = [parse_rational(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coefficients: Tuple[Fraction, ...] = tuple(coeffs)

    @classmethod
    def constant(cls, value: Number) -> 'UniPoly':
        return cls([value])

    @classmethod
    def from_roots(cls, roots: Sequence[Number], leading: Number = 1) -> 'UniPoly':
        result = cls([leading])
        for r in roots:
            result = result * cls([-Fraction(r), 1])
        return result

    @property
    def is_zero(self) -> bool:
        return not self.coefficients

    @property
    def degree(self) -> int:
        """-1 for the zero polynomial"""
        return len(self.coefficients) - 1

    @property
    def leading(self) -> Fraction:
        if self.is_zero:
            raise ZeroPolynomialError("zero polynomial has no leading coefficient")
        return self.coefficients[-1]

    def __getitem__(self, k: int) -> Fraction:
        return self.coefficients[k] if 0 <= k < len(self.coefficients) else Fraction(0)

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coefficients == other.coefficients
        if isinstance(other, (int, Fraction)):
            return self.coefficients == UniPoly([other]).coefficients
        return NotImplemented

    def __hash__(self):
        return hash(self.coefficients)

    def __repr__(self):
        return f"UniPoly({[str(c) for c in self.coefficients]})"

    def __add__(self, other: 'UniPoly') -> 'UniPoly':
        other = _lift(other)
        n = max(len(self.coefficients), len(other.coefficients))
        return UniPoly(self[k] + other[k] for k in range(n))

    __radd__ = __add__

    def __neg__(self) -> 'UniPoly':
        return UniPoly(-c for c in self.coefficients)

    def __sub__(self, other: 'UniPoly') -> 'UniPoly':
        return self + (-_lift(other))

    def __rsub__(self, other) -> 'UniPoly':
        return _lift(other) - self

    def __mul__(self, other: 'UniPoly') -> 'UniPoly':
        other = _lift(other)
        if self.is_zero or other.is_zero:
            return UniPoly()
        out = [Fraction(0)] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a == 0:
                continue
            for j, b in enumerate(other.coefficients):
                out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> 'UniPoly':
        result, base = UniPoly([1]), self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def scale(self, factor: Number) -> 'UniPoly':
        return UniPoly(c * factor for c in self.coefficients)

    def __call__(self, t: Number) -> Fraction:
        """Horner evaluation"""
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * t + c
        return acc

    def derivative(self) -> 'UniPoly':
        return UniPoly(k * c for k, c in enumerate(self.coefficients) if k > 0)

    def divmod(self, divisor: 'UniPoly') -> Tuple['UniPoly', 'UniPoly']:
        if divisor.is_zero:
            raise ZeroPolynomialError("division by the zero polynomial")
        remainder: List[Fraction] = list(self.coefficients)
        dd = divisor.degree
        lead = divisor.leading
        quotient = [Fraction(0)] * max(len(remainder) - dd, 0)
        for k in range(len(remainder) - dd - 1, -1, -1):
            q = remainder[k + dd] / lead
            quotient[k] = q
            if q:
                for j, c in enumerate(divisor.coefficients):
                    remainder[k + j] -= q * c
        return UniPoly(quotient), UniPoly(remainder[:dd] if dd > 0 else [])

    def __floordiv__(self, divisor: 'UniPoly') -> 'UniPoly':
        return self.divmod(divisor)[0]

    def __mod__(self, divisor: 'UniPoly') -> 'UniPoly':
        return self.divmod(divisor)[1]

    def monic(self) -> 'UniPoly':
        if self.is_zero:
            return self
        return self.scale(1 / self.leading)

    def reversed(self, degree: int = None) -> 'UniPoly':
        """t^degree * p(1/t)"""
        degree = self.degree if degree is None else degree
        padded = [self[k] for k in range(degree + 1)]
        return UniPoly(reversed(padded))


def _lift(value) -> UniPoly:
    if isinstance(value, UniPoly):
        return value
    return UniPoly([value])


def poly_gcd(p: UniPoly, q: UniPoly) -> UniPoly:
    """Monic gcd by the Euclidean algorithm (exact)"""
    a, b = p, q
    while not b.is_zero:
        a, b = b, a % b
    return a.monic()

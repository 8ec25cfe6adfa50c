from itertools import combinations
from math import factorial, prod
from typing import Iterable, Iterator, Tuple

from alphaperm.utils.exceptions.codec import ParseError


class MultiIndex(tuple):
    """n = (n_1, ..., n_m) in N^m; hashable, usable as a dict key"""

    def __new__(cls, parts: Iterable[int] = ()):
        values = tuple(parts)
        for v in values:
            if isinstance(v, bool) or not isinstance(v, int) or v < 0:
                raise ParseError("multi-index parts must be nonnegative integers", values)
        return super().__new__(cls, values)

    @classmethod
    def zero(cls, length: int) -> 'MultiIndex':
        return cls((0,) * length)

    @classmethod
    def unit(cls, length: int, i: int) -> 'MultiIndex':
        return cls(1 if j == i else 0 for j in range(length))

    @classmethod
    def parse(cls, text: str) -> 'MultiIndex':
        """Comma-separated parts, e.g. "1,0,2" """
        try:
            return cls(int(p) for p in text.split(",") if p.strip())
        except ValueError:
            raise ParseError("expected comma-separated nonnegative integers", text)

    @property
    def total(self) -> int:
        """|n|"""
        return sum(self)

    @property
    def factorial(self) -> int:
        """n! = prod n_i!"""
        return prod(factorial(v) for v in self)

    def __add__(self, other: 'MultiIndex') -> 'MultiIndex':
        return MultiIndex(a + b for a, b in zip(self, other))

    def graded_key(self) -> Tuple[int, Tuple[int, ...]]:
        """Graded-lex: total degree first, then larger leading exponents first"""
        return self.total, tuple(-v for v in self)

    def __repr__(self):
        return f"MultiIndex({list(self)})"


def indices_of_degree(length: int, degree: int) -> Iterator[MultiIndex]:
    """All n with |n| = degree (stars and bars); not sorted"""
    if length == 0:
        if degree == 0:
            yield MultiIndex()
        return
    for bars in combinations(range(degree + length - 1), length - 1):
        parts, prev = [], -1
        for b in bars:
            parts.append(b - prev - 1)
            prev = b
        parts.append(degree + length - 2 - prev)
        yield MultiIndex(parts)


def indices_up_to(length: int, max_degree: int) -> Iterator[MultiIndex]:
    """All n with |n| <= max_degree, graded-lex"""
    for d in range(max_degree + 1):
        yield from sorted(indices_of_degree(length, d), key=MultiIndex.graded_key)

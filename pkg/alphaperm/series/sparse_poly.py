"""
Sparse multivariate polynomials over exact scalars.
"""
from fractions import Fraction
from itertools import combinations
from typing import Any, Dict, List, Mapping, Sequence, Tuple

from alphaperm.numeric.scalar import (
    ComplexRational,
    Scalar,
    encode_scalar,
    format_scalar,
    parse_scalar,
    real_if_possible,
)
from alphaperm.numeric.unipoly import UniPoly
from alphaperm.permanent.multi_index import MultiIndex
from alphaperm.permanent.permanent import cycle_count
from alphaperm.utils.exceptions.codec import ParseError
from alphaperm.utils.exceptions.matrix import ShapeError
from alphaperm.utils.exceptions.polynomial import PolynomialError


def multiply_terms(a: Mapping[MultiIndex, Scalar], b: Mapping[MultiIndex, Scalar]) -> Dict[MultiIndex, Scalar]:
    """Product of two term maps, zero coefficients dropped"""
    out: Dict[MultiIndex, Scalar] = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            key = ea + eb
            out[key] = out.get(key, 0) + ca * cb
    return {k: real_if_possible(v) for k, v in out.items() if v != 0}


class SparsePoly:
    """
    Polynomial in ``nvars`` variables stored as {exponent: coefficient}.

    No zero coefficient is ever stored and every exponent has length nvars.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Sequence[int], Any] = None):
        self.nvars = nvars
        clean: Dict[MultiIndex, Scalar] = {}
        for exp, coef in (terms or {}).items():
            exp = exp if isinstance(exp, MultiIndex) else MultiIndex(exp)
            if len(exp) != nvars:
                raise ShapeError(f"exponent {list(exp)} has length {len(exp)}, expected {nvars}",
                                 precondition="exponent length == nvars")
            coef = real_if_possible(parse_scalar(coef))
            total = clean.get(exp, 0) + coef
            clean[exp] = total
        self.terms: Dict[MultiIndex, Scalar] = {k: v for k, v in clean.items() if v != 0}

    @classmethod
    def _raw(cls, nvars: int, terms: Dict[MultiIndex, Scalar]) -> 'SparsePoly':
        poly = cls.__new__(cls)
        poly.nvars = nvars
        poly.terms = terms
        return poly

    @classmethod
    def zero(cls, nvars: int) -> 'SparsePoly':
        return cls._raw(nvars, {})

    @classmethod
    def constant(cls, nvars: int, value: Any) -> 'SparsePoly':
        return cls(nvars, {MultiIndex.zero(nvars): value})

    @classmethod
    def variable(cls, nvars: int, i: int) -> 'SparsePoly':
        return cls._raw(nvars, {MultiIndex.unit(nvars, i): Fraction(1)})

    @classmethod
    def linear(cls, coefficients: Sequence[Any], constant: Any = 0) -> 'SparsePoly':
        """constant + sum c_i x_i"""
        n = len(coefficients)
        terms = {MultiIndex.unit(n, i): c for i, c in enumerate(coefficients)}
        terms[MultiIndex.zero(n)] = constant
        return cls(n, terms)

    @classmethod
    def product_of_variables(cls, nvars: int) -> 'SparsePoly':
        """x_1 x_2 ... x_n"""
        return cls._raw(nvars, {MultiIndex((1,) * nvars): Fraction(1)})

    # structure

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int:
        """Total degree, -1 for the zero polynomial"""
        return max((e.total for e in self.terms), default=-1)

    @property
    def is_homogeneous(self) -> bool:
        return len({e.total for e in self.terms}) <= 1

    def coefficient(self, exp: Sequence[int]) -> Scalar:
        return self.terms.get(MultiIndex(exp), Fraction(0))

    def sorted_terms(self) -> List[Tuple[MultiIndex, Scalar]]:
        """Terms in graded-lex order"""
        return sorted(self.terms.items(), key=lambda t: t[0].graded_key())

    def __eq__(self, other):
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __repr__(self):
        return f"SparsePoly({self.nvars}, {{{', '.join(f'{list(e)}: {c}' for e, c in self.sorted_terms())}}})"

    # ring operations

    def _coerce(self, other) -> 'SparsePoly':
        if isinstance(other, SparsePoly):
            if other.nvars != self.nvars:
                raise ShapeError(f"{self.nvars} vs {other.nvars} variables", precondition="same nvars")
            return other
        return SparsePoly.constant(self.nvars, other)

    def __add__(self, other) -> 'SparsePoly':
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return SparsePoly._raw(self.nvars, {e: real_if_possible(c) for e, c in out.items() if c != 0})

    __radd__ = __add__

    def __neg__(self) -> 'SparsePoly':
        return SparsePoly._raw(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> 'SparsePoly':
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> 'SparsePoly':
        return self._coerce(other) - self

    def __mul__(self, other) -> 'SparsePoly':
        if not isinstance(other, SparsePoly):
            return self.scale(other)
        other = self._coerce(other)
        return SparsePoly._raw(self.nvars, multiply_terms(self.terms, other.terms))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> 'SparsePoly':
        if exponent < 0:
            raise PolynomialError("negative powers of polynomials are not polynomials")
        result, base = SparsePoly.constant(self.nvars, 1), self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def scale(self, factor: Any) -> 'SparsePoly':
        factor = parse_scalar(factor)
        if factor == 0:
            return SparsePoly.zero(self.nvars)
        return SparsePoly._raw(self.nvars, {e: real_if_possible(c * factor) for e, c in self.terms.items()})

    # calculus and evaluation

    def evaluate(self, point: Sequence[Any]) -> Scalar:
        if len(point) != self.nvars:
            raise ShapeError(f"point of length {len(point)} for {self.nvars} variables",
                             precondition="len(point) == nvars")
        x = [parse_scalar(v) for v in point]
        total: Scalar = Fraction(0)
        for exp, coef in self.terms.items():
            term = coef
            for xi, k in zip(x, exp):
                if k:
                    term = term * xi ** k
            total = total + term
        return real_if_possible(total)

    __call__ = evaluate

    def partial(self, i: int) -> 'SparsePoly':
        out: Dict[MultiIndex, Scalar] = {}
        for exp, coef in self.terms.items():
            k = exp[i]
            if k:
                lowered = MultiIndex(v - 1 if j == i else v for j, v in enumerate(exp))
                out[lowered] = coef * k
        return SparsePoly._raw(self.nvars, out)

    def directional_derivative(self, v: Sequence[Any]) -> 'SparsePoly':
        """D_v = sum v_i d/dx_i"""
        if len(v) != self.nvars:
            raise ShapeError(f"direction of length {len(v)} for {self.nvars} variables",
                             precondition="len(v) == nvars")
        result = SparsePoly.zero(self.nvars)
        for i, vi in enumerate(v):
            vi = parse_scalar(vi)
            if vi != 0:
                result = result + self.partial(i).scale(vi)
        return result

    def restrict_to_line(self, x: Sequence[Any], e: Sequence[Any]) -> UniPoly:
        """t -> h(x + t e) as an exact univariate polynomial"""
        if len(x) != self.nvars or len(e) != self.nvars:
            raise ShapeError("line data must have length nvars", precondition="len(x) == len(e) == nvars")
        lines = [UniPoly([parse_scalar(a), parse_scalar(b)]) for a, b in zip(x, e)]
        result = UniPoly()
        for exp, coef in self.terms.items():
            if isinstance(coef, ComplexRational):
                raise PolynomialError("line restriction needs real coefficients", "real polynomial")
            term = UniPoly([coef])
            for line, k in zip(lines, exp):
                if k:
                    term = term * line ** k
            result = result + term
        return result

    # codec

    def to_dict(self) -> Dict[str, Any]:
        return {
            "nvars": self.nvars,
            "terms": [{"exp": list(e), "coef": format_scalar(c)} for e, c in self.sorted_terms()],
        }

    def to_json_terms(self) -> List[Dict[str, Any]]:
        """Input-format term list (ints stay ints)"""
        return [{"exp": list(e), "coef": encode_scalar(c)} for e, c in self.sorted_terms()]

    @classmethod
    def from_dict(cls, data: Any, nvars: int = None) -> 'SparsePoly':
        """Accepts {"nvars", "terms": [...]} or a bare term list"""
        terms = data.get("terms") if isinstance(data, dict) else data
        if not isinstance(terms, list):
            raise ParseError("polynomial must be a term list of {'exp', 'coef'}", data)
        if isinstance(data, dict) and "nvars" in data:
            nvars = data["nvars"]
        if nvars is None:
            if not terms:
                raise ParseError("cannot infer nvars from an empty term list", data)
            nvars = len(terms[0].get("exp", []))
        parsed = {}
        for term in terms:
            if not isinstance(term, dict) or "exp" not in term or "coef" not in term:
                raise ParseError("each term needs 'exp' and 'coef'", term)
            key = MultiIndex(term["exp"])
            parsed[key] = parsed.get(key, 0) + parse_scalar(term["coef"])
        return cls(nvars, parsed)


def polynomial_det(entries: Sequence[Sequence[SparsePoly]]) -> SparsePoly:
    """
    Leibniz determinant of a small square matrix of polynomials.

    sgn(sigma) = (-1)^(n - c(sigma)); zero entries prune the enumeration.
    """
    n = len(entries)
    if any(len(row) != n for row in entries):
        raise ShapeError("polynomial matrix must be square", precondition="square matrix")
    if n == 0:
        raise ShapeError("empty polynomial matrix", precondition="n >= 1")
    nvars = entries[0][0].nvars
    total: Dict[MultiIndex, Scalar] = {}
    used = [False] * n
    sigma: List[int] = []

    def walk(i: int, product: Dict[MultiIndex, Scalar]):
        if i == n:
            sign = -1 if (n - cycle_count(sigma)) % 2 else 1
            for e, c in product.items():
                total[e] = total.get(e, 0) + sign * c
            return
        for j in range(n):
            if used[j] or entries[i][j].is_zero:
                continue
            used[j] = True
            sigma.append(j)
            walk(i + 1, multiply_terms(product, entries[i][j].terms))
            sigma.pop()
            used[j] = False

    walk(0, {MultiIndex.zero(nvars): Fraction(1)})
    return SparsePoly._raw(nvars, {e: real_if_possible(c) for e, c in total.items() if c != 0})


def elementary_symmetric_poly(nvars: int, k: int) -> SparsePoly:
    """e_k(x_1, ..., x_n) as a polynomial"""
    terms = {}
    for subset in combinations(range(nvars), k):
        terms[MultiIndex(1 if i in subset else 0 for i in range(nvars))] = Fraction(1)
    return SparsePoly(nvars, terms)


def lorentz_polynomial(nvars: int) -> SparsePoly:
    """x_1^2 - x_2^2 - ... - x_n^2"""
    terms = {MultiIndex((2 if i == j else 0) for j in range(nvars)): (1 if i == 0 else -1) for i in range(nvars)}
    return SparsePoly(nvars, terms)

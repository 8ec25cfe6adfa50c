"""
Multivariate power series truncated at a total degree D.

Series are kept as homogeneous layers: ``layers[k]`` maps every exponent of
total degree k to its coefficient. Products and the log / exp / power
recurrences then work one layer at a time, and terms above D never appear.

The recurrences come from the Euler operator E = sum x_i d/dx_i, which
multiplies a degree-k layer by k. For g = f^e with f_0 = 1, E g * f = e g E f
gives

    k g_k = sum_{j=1..k} (e j - (k - j)) f_j g_{k-j}
"""
from fractions import Fraction
from itertools import product
from typing import Any, Dict, Iterator, List, Mapping, Sequence, Tuple

from alphaperm.numeric.scalar import Scalar, parse_rational, parse_scalar, real_if_possible
from alphaperm.permanent.multi_index import MultiIndex
from alphaperm.series.sparse_poly import SparsePoly, multiply_terms
from alphaperm.utils.exceptions.matrix import ShapeError
from alphaperm.utils.exceptions.series import ConstantTermError

Layer = Dict[MultiIndex, Scalar]


def _add_scaled(target: Layer, source: Mapping[MultiIndex, Scalar], factor) -> None:
    if factor == 0:
        return
    for e, c in source.items():
        target[e] = target.get(e, 0) + factor * c


def _clean(layer: Layer) -> Layer:
    return {e: real_if_possible(c) for e, c in layer.items() if c != 0}


class TruncatedSeries:
    """Power series in ``nvars`` variables modulo terms of total degree > D"""

    __slots__ = ("nvars", "max_degree", "layers")

    def __init__(self, nvars: int, max_degree: int, terms: Mapping[Sequence[int], Any] = None):
        if max_degree < 0:
            raise ShapeError("truncation degree must be >= 0", precondition="D >= 0")
        self.nvars = nvars
        self.max_degree = max_degree
        self.layers: List[Layer] = [{} for _ in range(max_degree + 1)]
        for exp, coef in (terms or {}).items():
            exp = exp if isinstance(exp, MultiIndex) else MultiIndex(exp)
            if len(exp) != nvars:
                raise ShapeError(f"exponent of length {len(exp)} in a {nvars}-variable series",
                                 precondition="exponent length == nvars")
            if exp.total <= max_degree:
                layer = self.layers[exp.total]
                layer[exp] = layer.get(exp, 0) + parse_scalar(coef)
        self.layers = [_clean(layer) for layer in self.layers]

    @classmethod
    def _from_layers(cls, nvars: int, layers: List[Layer]) -> 'TruncatedSeries':
        series = cls.__new__(cls)
        series.nvars = nvars
        series.max_degree = len(layers) - 1
        series.layers = layers
        return series

    @classmethod
    def from_poly(cls, poly: SparsePoly, max_degree: int) -> 'TruncatedSeries':
        return cls(poly.nvars, max_degree, poly.terms)

    @classmethod
    def one(cls, nvars: int, max_degree: int) -> 'TruncatedSeries':
        return cls(nvars, max_degree, {MultiIndex.zero(nvars): 1})

    @property
    def constant_term(self) -> Scalar:
        return self.layers[0].get(MultiIndex.zero(self.nvars), Fraction(0))

    def coefficient(self, exp: Sequence[int]) -> Scalar:
        exp = MultiIndex(exp)
        if exp.total > self.max_degree:
            raise ShapeError(f"|n| = {exp.total} exceeds the truncation degree {self.max_degree}",
                             precondition="|n| <= D")
        return self.layers[exp.total].get(exp, Fraction(0))

    @property
    def terms(self) -> Dict[MultiIndex, Scalar]:
        return {e: c for layer in self.layers for e, c in layer.items()}

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (self.nvars, self.max_degree, self.layers) == (other.nvars, other.max_degree, other.layers)

    def __repr__(self):
        return f"TruncatedSeries(nvars={self.nvars}, D={self.max_degree}, terms={len(self.terms)})"

    def _check(self, other: 'TruncatedSeries') -> int:
        if other.nvars != self.nvars:
            raise ShapeError(f"{self.nvars} vs {other.nvars} variables", precondition="same nvars")
        return min(self.max_degree, other.max_degree)

    def __add__(self, other: 'TruncatedSeries') -> 'TruncatedSeries':
        D = self._check(other)
        layers = []
        for k in range(D + 1):
            layer = dict(self.layers[k])
            _add_scaled(layer, other.layers[k], 1)
            layers.append(_clean(layer))
        return TruncatedSeries._from_layers(self.nvars, layers)

    def __neg__(self) -> 'TruncatedSeries':
        return self.scale(-1)

    def __sub__(self, other: 'TruncatedSeries') -> 'TruncatedSeries':
        return self + (-other)

    def scale(self, factor) -> 'TruncatedSeries':
        factor = parse_scalar(factor)
        return TruncatedSeries._from_layers(
            self.nvars, [_clean({e: c * factor for e, c in layer.items()}) for layer in self.layers])

    def __mul__(self, other: 'TruncatedSeries') -> 'TruncatedSeries':
        if not isinstance(other, TruncatedSeries):
            return self.scale(other)
        D = self._check(other)
        layers = []
        for k in range(D + 1):
            layer: Layer = {}
            for j in range(k + 1):
                if self.layers[j] and other.layers[k - j]:
                    _add_scaled(layer, multiply_terms(self.layers[j], other.layers[k - j]), 1)
            layers.append(_clean(layer))
        return TruncatedSeries._from_layers(self.nvars, layers)

    __rmul__ = __mul__


def _require_constant(f: TruncatedSeries, expected: int, operation: str) -> None:
    if f.constant_term != expected:
        raise ConstantTermError(f"{operation} needs constant term {expected}, got {f.constant_term}",
                                expected=str(expected))


def _product_layer(f: TruncatedSeries, j: int, g_layer: Layer) -> Layer:
    if not f.layers[j] or not g_layer:
        return {}
    return multiply_terms(f.layers[j], g_layer)


def iter_pow_layers(f: TruncatedSeries, exponent) -> Iterator[Tuple[int, Layer]]:
    """
    Yield (k, layer k of f^exponent) for k = 0..D, computing each layer only
    when asked for.
    """
    e = parse_rational(exponent)
    _require_constant(f, 1, "series_pow")
    g: List[Layer] = [{MultiIndex.zero(f.nvars): Fraction(1)}]
    yield 0, g[0]
    for k in range(1, f.max_degree + 1):
        layer: Layer = {}
        for j in range(1, k + 1):
            weight = e * j - (k - j)
            if weight != 0:
                _add_scaled(layer, _product_layer(f, j, g[k - j]), weight)
        layer = _clean({x: c / k for x, c in layer.items()})
        g.append(layer)
        yield k, layer


def series_pow(f: TruncatedSeries, exponent) -> TruncatedSeries:
    """f^e for rational e, truncated at f's degree; f must have constant term 1"""
    layers = [layer for _, layer in iter_pow_layers(f, exponent)]
    return TruncatedSeries._from_layers(f.nvars, layers)


def series_log(f: TruncatedSeries) -> TruncatedSeries:
    """
    log f for f with constant term 1:
    k L_k = k f_k - sum_{j=1..k-1} (k - j) f_j L_{k-j}
    """
    _require_constant(f, 1, "series_log")
    L: List[Layer] = [{}]
    for k in range(1, f.max_degree + 1):
        layer: Layer = {e: k * c for e, c in f.layers[k].items()}
        for j in range(1, k):
            _add_scaled(layer, _product_layer(f, j, L[k - j]), -(k - j))
        L.append(_clean({x: c / k for x, c in layer.items()}))
    return TruncatedSeries._from_layers(f.nvars, L)


def series_exp(u: TruncatedSeries) -> TruncatedSeries:
    """
    exp u for u with constant term 0:
    k g_k = sum_{j=1..k} j u_j g_{k-j}
    """
    _require_constant(u, 0, "series_exp")
    g: List[Layer] = [{MultiIndex.zero(u.nvars): Fraction(1)}]
    for k in range(1, u.max_degree + 1):
        layer: Layer = {}
        for j in range(1, k + 1):
            _add_scaled(layer, _product_layer(u, j, g[k - j]), j)
        g.append(_clean({x: c / k for x, c in layer.items()}))
    return TruncatedSeries._from_layers(u.nvars, g)


def box_pow_coefficient(poly: SparsePoly, exponent, n: Sequence[int]) -> Scalar:
    """
    Coefficient of x^n in poly^exponent for a polynomial with constant term 1.

    The same recurrence as ``iter_pow_layers``, applied one monomial at a
    time over the box {mu <= n}, so a single coefficient of high total degree
    costs prod(n_i + 1) steps instead of a full truncated series.
    """
    e = parse_rational(exponent)
    n = n if isinstance(n, MultiIndex) else MultiIndex(n)
    if len(n) != poly.nvars:
        raise ShapeError(f"index of length {len(n)} for {poly.nvars} variables", precondition="len(n) == nvars")
    if poly.coefficient([0] * poly.nvars) != 1:
        raise ConstantTermError(f"box_pow_coefficient got {poly.coefficient([0] * poly.nvars)}", expected="1")
    terms = [(nu, c, nu.total) for nu, c in poly.terms.items() if nu.total > 0]
    g: Dict[Tuple[int, ...], Scalar] = {}
    for mu in product(*(range(k + 1) for k in n)):
        k = sum(mu)
        if k == 0:
            g[mu] = Fraction(1)
            continue
        acc: Scalar = Fraction(0)
        for nu, c, j in terms:
            if all(a <= b for a, b in zip(nu, mu)):
                acc += (e * j - (k - j)) * c * g[tuple(b - a for a, b in zip(nu, mu))]
        g[mu] = acc / k
    return real_if_possible(g[tuple(n)])

"""
The quotients whose concavity is scanned.

bapat:               per(b_1..b_k, x..x) / per(b_0, b_1..b_k, x..x)       on R^n_{++}
hyperbolic:          H(b_1..b_k, x..x) / H(b_0, b_1..b_k, x..x)           on the cone of h
mixed-discriminant:  the hyperbolic quotient of det over symmetric matrices
"""
from fractions import Fraction
from typing import Any, List, Optional, Sequence

from pydantic import BaseModel, ConfigDict

from alphaperm.config.config import get_global_config
from alphaperm.enums.quotient_e import QuotientMode
from alphaperm.hyperbolic.instance import HyperbolicInstance, certify_hyperbolic, cone_member
from alphaperm.hyperbolic.matrix_forms import flatten_symmetric, symmetric_det_polynomial
from alphaperm.hyperbolic.polarization import partial_polarization, polarized_form
from alphaperm.numeric.linalg import det_exact, is_psd_exact
from alphaperm.numeric.matrix import RMatrix
from alphaperm.numeric.scalar import Scalar, parse_rational
from alphaperm.permanent.permanent import per_ryser
from alphaperm.series.sparse_poly import SparsePoly
from alphaperm.utils.exceptions.hyperbolic import ConeMembershipError, HyperbolicError, UncertifiedInstanceError
from alphaperm.utils.exceptions.matrix import ShapeError


def _vectors(data: Sequence[Sequence[Any]]) -> List[List[Fraction]]:
    return [[parse_rational(c) for c in v] for v in data]


class QuotientSpec(BaseModel):
    """
    Fixed data of a quotient: ``fixed`` holds b_0, b_1, ..., b_k (flattened
    matrices A_0..A_k in mixed-discriminant mode).
    """
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    mode: QuotientMode
    fixed: List[List[Fraction]]
    h: SparsePoly
    e: List[Fraction]
    numerator: SparsePoly
    denominator: SparsePoly
    instance: Optional[HyperbolicInstance] = None
    size: Optional[int] = None

    @property
    def nvars(self) -> int:
        return self.h.nvars

    @property
    def k(self) -> int:
        return len(self.fixed) - 1

    @staticmethod
    def _polarizations(h: SparsePoly, fixed: List[List[Fraction]]):
        d = h.degree
        if not 1 <= len(fixed) <= d:
            raise ShapeError(f"{len(fixed)} fixed vectors for degree {d}", precondition="k < d")
        if len(fixed) == d:
            # k = d - 1: the denominator is the full polarized form, a constant
            denominator = SparsePoly.constant(h.nvars, polarized_form(h, fixed))
        else:
            denominator = partial_polarization(h, fixed)
        return partial_polarization(h, fixed[1:]), denominator

    @classmethod
    def bapat(cls, fixed: Sequence[Sequence[Any]]) -> 'QuotientSpec':
        """b_0..b_k in R^n_{++}"""
        fixed = _vectors(fixed)
        n = len(fixed[0]) if fixed else 0
        if any(len(b) != n for b in fixed):
            raise ShapeError("fixed vectors have different lengths", precondition="len(b_i) == n")
        if any(c <= 0 for b in fixed for c in b):
            raise ConeMembershipError("fixed vectors must be entrywise positive")
        h = SparsePoly.product_of_variables(n)
        numerator, denominator = cls._polarizations(h, fixed)
        return cls(mode=QuotientMode.BAPAT, fixed=fixed, h=h, e=[Fraction(1)] * n,
                   numerator=numerator, denominator=denominator)

    @classmethod
    def hyperbolic(cls, instance: HyperbolicInstance, fixed: Sequence[Sequence[Any]],
                   mode: QuotientMode = QuotientMode.HYPERBOLIC, size: Optional[int] = None) -> 'QuotientSpec':
        """b_0..b_k in the cone of a certified instance"""
        if not instance.certified:
            raise UncertifiedInstanceError()
        fixed = _vectors(fixed)
        for b in fixed:
            if not cone_member(instance, b):
                raise ConeMembershipError(f"fixed vector {[str(c) for c in b]}")
        numerator, denominator = cls._polarizations(instance.h, fixed)
        return cls(mode=mode, fixed=fixed, h=instance.h, e=instance.e, numerator=numerator,
                   denominator=denominator, instance=instance, size=size)

    @classmethod
    def mixed_discriminant(cls, matrices: Sequence[RMatrix], trials: Optional[int] = None,
                           seed: int = 0) -> 'QuotientSpec':
        """A_0..A_k positive definite n x n, over the flattened determinant"""
        if not matrices:
            raise ShapeError("no fixed matrices", precondition="k >= 0")
        n = matrices[0].rows
        for A in matrices:
            A = A if A.symmetric else A.detect_structure()
            if A.shape != (n, n) or not A.symmetric:
                raise ShapeError(f"fixed matrices must be symmetric {n}x{n}", precondition="symmetric n x n")
            if not is_psd_exact(A) or det_exact(A) == 0:
                raise ConeMembershipError("fixed matrices must be positive definite")
        instance = certify_hyperbolic(symmetric_det_polynomial(n), flatten_symmetric(RMatrix.identity(n)),
                                      trials=trials, seed=seed)
        return cls.hyperbolic(instance, [flatten_symmetric(A) for A in matrices],
                              mode=QuotientMode.MIXED_DISCRIMINANT, size=n)


def _ratio(numerator: Scalar, denominator: Scalar) -> Scalar:
    if denominator == 0:
        raise HyperbolicError("quotient denominator vanishes", precondition="nonzero denominator")
    return numerator / denominator


def bapat_quotient(spec: QuotientSpec, x: Sequence[Any]) -> Scalar:
    """Ratio of permanents of the matrices with columns (b_1..b_k, x..x) and (b_0..b_k, x..x)"""
    x = [parse_rational(c) for c in x]
    n = len(spec.fixed[0])
    if len(x) != n:
        raise ShapeError(f"point of length {len(x)} for n = {n}", precondition="len(x) == n")
    if any(c <= 0 for c in x):
        raise ConeMembershipError("x must be entrywise positive")
    k = spec.k
    num = per_ryser(RMatrix.from_columns(spec.fixed[1:] + [x] * (n - k)))
    den = per_ryser(RMatrix.from_columns(spec.fixed + [x] * (n - k - 1)))
    return _ratio(num, den)


def hyperbolic_quotient(spec: QuotientSpec, x: Sequence[Any]) -> Scalar:
    """
    g(x) / g_0(x) for the two partial polarizations; x must lie in the cone.

    Both polarizations carry the (d-k)!/d! normalization, so g_0(x) = D_e h(x) / d
    and the quotient is the ratio of polarized forms. For the Lorentz form with
    k = 0 and e = (1, 0, ..., 0) this gives h(x) / x_1, not h(x) / (2 x_1):
    the factor 2 = d cancels against the normalization.
    """
    if spec.instance is None:
        raise UncertifiedInstanceError("hyperbolic_quotient needs a spec built from a certified instance")
    x = [parse_rational(c) for c in x]
    if not cone_member(spec.instance, x):
        raise ConeMembershipError(f"x = {[str(c) for c in x]}")
    return _ratio(spec.numerator.evaluate(x), spec.denominator.evaluate(x))


def evaluate_quotient(spec: QuotientSpec, x: Sequence[Any]) -> Scalar:
    if spec.mode == QuotientMode.BAPAT:
        return bapat_quotient(spec, x)
    return hyperbolic_quotient(spec, x)


def elementary_symmetric(k: int, x: Sequence[Any]) -> Scalar:
    """e_k(x) by the usual prefix recurrence"""
    n = len(x)
    if not 0 <= k <= n:
        raise ShapeError(f"k = {k} outside 0..{n}", precondition="0 <= k <= n")
    e = [Fraction(1)] + [Fraction(0)] * k
    for value in x:
        value = parse_rational(value)
        for j in range(min(k, n), 0, -1):
            e[j] += value * e[j - 1]
    return e[k]


def symmetric_mean_ratio(n: int, k: int, x: Sequence[Any]) -> Scalar:
    """e_{n-k}(x) / e_{n-k-1}(x)"""
    if len(x) != n:
        raise ShapeError(f"point of length {len(x)} for n = {n}", precondition="len(x) == n")
    return _ratio(elementary_symmetric(n - k, x), elementary_symmetric(n - k - 1, x))

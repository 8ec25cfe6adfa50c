from fractions import Fraction

import pytest

from alphaperm.numeric.unipoly import UniPoly
from alphaperm.series import (
    SparsePoly,
    elementary_symmetric_poly,
    lorentz_polynomial,
    polynomial_det,
)
from alphaperm.utils.exceptions.codec import ParseError
from alphaperm.utils.exceptions.matrix import ShapeError
from alphaperm.utils.exceptions.polynomial import PolynomialError


def x(i, nvars=2):
    return SparsePoly.variable(nvars, i)


class TestSparsePoly:
    def test_zero_terms_are_dropped(self):
        p = SparsePoly(2, {(1, 0): 1, (0, 1): 0})
        assert p.terms == {(1, 0): 1}
        assert (p - p).is_zero
        assert (p - p).degree == -1

    def test_exponent_length(self):
        with pytest.raises(ShapeError):
            SparsePoly(2, {(1, 0, 0): 1})

    def test_ring_operations(self):
        """(x1 + x2)^2 = x1^2 + 2 x1 x2 + x2^2"""
        p = (x(0) + x(1)) ** 2
        assert p == SparsePoly(2, {(2, 0): 1, (1, 1): 2, (0, 2): 1})
        assert p.is_homogeneous
        assert not (p + 1).is_homogeneous

    def test_negative_power(self):
        with pytest.raises(PolynomialError):
            x(0) ** -1

    def test_evaluate(self):
        assert lorentz_polynomial(3)((2, 1, 1)) == 2
        assert elementary_symmetric_poly(3, 2)((1, 2, 3)) == 11
        assert SparsePoly.product_of_variables(3)(("1/2", 2, 3)) == 3

    def test_derivatives(self):
        """D_(1,1) (x1^2 x2) = 2 x1 x2 + x1^2"""
        p = SparsePoly(2, {(2, 1): 1})
        assert p.partial(0) == SparsePoly(2, {(1, 1): 2})
        assert p.directional_derivative([1, 1]) == SparsePoly(2, {(1, 1): 2, (2, 0): 1})

    def test_restrict_to_line(self):
        """x1 x2 on (1, 0) + t (1, 1) is t + t^2"""
        p = x(0) * x(1)
        assert p.restrict_to_line([1, 0], [1, 1]) == UniPoly([0, 1, 1])

    def test_dict_codec(self):
        p = SparsePoly(2, {(1, 0): Fraction(1, 2), (0, 0): -1})
        data = p.to_dict()
        assert data["terms"] == [{"exp": [0, 0], "coef": "-1"}, {"exp": [1, 0], "coef": "1/2"}]
        assert SparsePoly.from_dict(data) == p
        assert SparsePoly.from_dict(p.to_json_terms()) == p

    def test_from_dict_rejects_malformed_terms(self):
        with pytest.raises(ParseError):
            SparsePoly.from_dict([{"exp": [1]}])
        with pytest.raises(ParseError):
            SparsePoly.from_dict([])


class TestPolynomialDet:
    def test_two_by_two(self):
        """det [[x1, 1], [1, x2]] = x1 x2 - 1"""
        one = SparsePoly.constant(2, 1)
        assert polynomial_det([[x(0), one], [one, x(1)]]) == x(0) * x(1) - 1

    def test_linear_entries(self):
        """det(I - diag(x)) = (1 - x1)(1 - x2)"""
        entries = [[SparsePoly.linear([-1, 0], 1), SparsePoly.zero(2)],
                   [SparsePoly.zero(2), SparsePoly.linear([0, -1], 1)]]
        assert polynomial_det(entries) == (1 - x(0)) * (1 - x(1))

    def test_non_square(self):
        with pytest.raises(ShapeError):
            polynomial_det([[x(0), x(1)]])

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from alphaperm.series import (
    SparsePoly,
    TruncatedSeries,
    box_pow_coefficient,
    iter_pow_layers,
    series_exp,
    series_log,
    series_pow,
)
from alphaperm.utils.exceptions.matrix import ShapeError
from alphaperm.utils.exceptions.series import ConstantTermError

small = st.fractions(min_value=-3, max_value=3, max_denominator=4)


@st.composite
def unit_series(draw, nvars=2, max_degree=4):
    """Series with constant term 1 and a few low-degree terms"""
    terms = {(0,) * nvars: 1}
    for exp in [(1, 0), (0, 1), (1, 1), (2, 0)]:
        terms[exp] = draw(small)
    return TruncatedSeries(nvars, max_degree, terms)


class TestTruncatedSeries:
    def test_terms_above_degree_are_dropped(self):
        s = TruncatedSeries(1, 2, {(1,): 1, (3,): 5})
        assert s.terms == {(1,): 1}

    def test_coefficient_beyond_truncation(self):
        with pytest.raises(ShapeError):
            TruncatedSeries(1, 2).coefficient((3,))

    def test_product_truncates(self):
        """(1 + x)(1 - x) = 1 - x^2, cut at degree 1"""
        a = TruncatedSeries(1, 1, {(0,): 1, (1,): 1})
        b = TruncatedSeries(1, 1, {(0,): 1, (1,): -1})
        assert (a * b).terms == {(0,): 1}


class TestPowers:
    def test_geometric_series(self):
        """(1 - x)^-1 = sum x^k"""
        f = TruncatedSeries.from_poly(SparsePoly(1, {(0,): 1, (1,): -1}), 6)
        g = series_pow(f, -1)
        assert all(g.coefficient((k,)) == 1 for k in range(7))

    def test_square_root(self):
        """(1 + x)^(1/2) squared is 1 + x"""
        f = TruncatedSeries(1, 5, {(0,): 1, (1,): 1})
        root = series_pow(f, Fraction(1, 2))
        assert root.coefficient((2,)) == Fraction(-1, 8)
        assert root * root == f

    def test_layers_are_lazy(self):
        """The first layer comes out before the rest are computed"""
        f = TruncatedSeries(2, 10, {(0, 0): 1, (1, 0): -1, (0, 1): -1})
        k, layer = next(iter_pow_layers(f, 3))
        assert k == 0 and layer == {(0, 0): 1}

    def test_constant_term_one_required(self):
        f = TruncatedSeries(1, 3, {(0,): 2, (1,): 1})
        with pytest.raises(ConstantTermError):
            series_pow(f, 2)
        with pytest.raises(ConstantTermError):
            series_log(f)

    def test_exp_needs_zero_constant(self):
        with pytest.raises(ConstantTermError):
            series_exp(TruncatedSeries.one(1, 3))

    @settings(max_examples=25, deadline=None)
    @given(unit_series())
    def test_log_exp_inverse(self, f):
        assert series_exp(series_log(f)) == f

    @settings(max_examples=25, deadline=None)
    @given(unit_series(), small)
    def test_pow_is_exp_of_scaled_log(self, f, e):
        """f^e = exp(e log f)"""
        assert series_pow(f, e) == series_exp(series_log(f).scale(e))

    @settings(max_examples=25, deadline=None)
    @given(unit_series())
    def test_integer_power_matches_product(self, f):
        assert series_pow(f, 3) == f * f * f


@st.composite
def unit_polys(draw, nvars=2):
    terms = {(0,) * nvars: 1}
    for exp in [(1, 0), (0, 1), (1, 1), (2, 0)]:
        terms[exp] = draw(small)
    return SparsePoly(nvars, terms)


class TestBoxCoefficient:
    def test_geometric_series(self):
        assert box_pow_coefficient(SparsePoly(1, {(0,): 1, (1,): -1}), -1, (7,)) == 1

    def test_binomial(self):
        """[x^2 y] (1 + x + y)^(1/2) = 3 (1/2)(-1/2)(-3/2) / 3! = 3/16"""
        f = SparsePoly(2, {(0, 0): 1, (1, 0): 1, (0, 1): 1})
        assert box_pow_coefficient(f, Fraction(1, 2), (2, 1)) == Fraction(3, 16)

    @settings(max_examples=25, deadline=None)
    @given(unit_polys(), small, st.sampled_from([(0, 0), (1, 0), (2, 1), (0, 3), (2, 2)]))
    def test_matches_truncated_power(self, f, e, n):
        expected = series_pow(TruncatedSeries.from_poly(f, sum(n)), e).coefficient(n)
        assert box_pow_coefficient(f, e, n) == expected

    def test_constant_term_one_required(self):
        with pytest.raises(ConstantTermError):
            box_pow_coefficient(SparsePoly(1, {(0,): 2, (1,): 1}), 2, (1,))

    def test_index_length(self):
        with pytest.raises(ShapeError):
            box_pow_coefficient(SparsePoly(1, {(0,): 1}), 2, (1, 1))

from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from alphaperm.numeric.sturm import (
    count_real_roots,
    squarefree_part,
    sturm_real_rooted,
    sturm_roots_all_negative,
)
from alphaperm.numeric.unipoly import UniPoly, poly_gcd
from alphaperm.utils.exceptions.polynomial import ZeroPolynomialError


class TestUniPoly:
    def test_division_with_remainder(self):
        """t^3 - 1 = (t - 1)(t^2 + t + 1)"""
        q, r = UniPoly([-1, 0, 0, 1]).divmod(UniPoly([-1, 1]))
        assert q == UniPoly([1, 1, 1])
        assert r.is_zero

    def test_gcd_is_monic(self):
        """gcd((t-1)(t-2), 2(t-1)(t+3)) = t - 1"""
        p = UniPoly.from_roots([1, 2])
        q = UniPoly.from_roots([1, -3], leading=2)
        assert poly_gcd(p, q) == UniPoly([-1, 1])

    def test_evaluation_and_derivative(self):
        p = UniPoly([1, 0, 3])
        assert p(Fraction(1, 2)) == Fraction(7, 4)
        assert p.derivative() == UniPoly([0, 6])

    def test_zero_division(self):
        with pytest.raises(ZeroPolynomialError):
            UniPoly([1, 1]).divmod(UniPoly())


class TestSturm:
    def test_distinct_roots(self):
        """(t-1)(t-2)(t-3) has three real roots, two of them in (1, 3]"""
        p = UniPoly.from_roots([1, 2, 3])
        assert count_real_roots(p) == 3
        assert count_real_roots(p, Fraction(1), Fraction(3)) == 2
        assert sturm_real_rooted(p)

    def test_no_real_roots(self):
        """t^2 + 1 is not real-rooted"""
        p = UniPoly([1, 0, 1])
        assert count_real_roots(p) == 0
        assert not sturm_real_rooted(p)

    def test_repeated_roots(self):
        """(t-1)^2 (t+2) is real-rooted with squarefree part (t-1)(t+2)"""
        p = UniPoly.from_roots([1, 1, -2])
        assert squarefree_part(p) == UniPoly.from_roots([1, -2])
        assert sturm_real_rooted(p)

    def test_roots_all_negative(self):
        """A root at 0 is on the boundary, not negative"""
        assert sturm_roots_all_negative(UniPoly.from_roots([-1, -2]))
        assert not sturm_roots_all_negative(UniPoly.from_roots([0, -1]))
        assert not sturm_roots_all_negative(UniPoly.from_roots([1, -1]))

    def test_zero_polynomial(self):
        with pytest.raises(ZeroPolynomialError):
            sturm_real_rooted(UniPoly())

    @settings(max_examples=40, deadline=None)
    @given(st.lists(st.integers(-6, 6), min_size=2, max_size=6).filter(lambda c: c[-1] != 0))
    def test_matches_sympy_root_count(self, coefficients):
        """Distinct real roots agree with sympy's real_roots"""
        t = sympy.Symbol("t")
        expr = sum(c * t ** k for k, c in enumerate(coefficients))
        expected = len(set(sympy.Poly(expr, t).real_roots()))
        assert count_real_roots(UniPoly(coefficients)) == expected

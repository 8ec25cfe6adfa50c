from fractions import Fraction
from math import factorial

import pytest

from alphaperm.hyperbolic import (
    HyperbolicInstance,
    certify_hyperbolic,
    cone_member,
    garding_lemma_test,
    partial_polarization,
    polarized_form,
)
from alphaperm.numeric.matrix import RMatrix
from alphaperm.permanent import per_ryser
from alphaperm.series import SparsePoly, elementary_symmetric_poly, lorentz_polynomial
from alphaperm.utils.exceptions.hyperbolic import (
    ConeMembershipError,
    HyperbolicError,
    NotHomogeneousError,
    NotHyperbolicError,
    UncertifiedInstanceError,
)
from alphaperm.utils.exceptions.matrix import ShapeError
from alphaperm.utils.sampling import make_rng, random_positive_vector, random_vector


class TestCertification:
    def test_lorentz_is_certified(self, lorentz3):
        """Coordinate checks plus every random line are counted"""
        assert lorentz3.certified
        assert lorentz3.cert.trials == 30
        assert lorentz3.cert.coordinate_checks == 3
        assert lorentz3.cert.passed == 33
        assert lorentz3.degree == 2

    def test_elementary_symmetric_is_hyperbolic(self):
        inst = certify_hyperbolic(elementary_symmetric_poly(4, 2), [1, 1, 1, 1], trials=20)
        assert inst.certified

    def test_sum_of_squares_is_not(self):
        """x1^2 + x2^2 fails on the line through (0, 1)"""
        h = SparsePoly(2, {(2, 0): 1, (0, 2): 1})
        with pytest.raises(NotHyperbolicError) as info:
            certify_hyperbolic(h, [1, 0], trials=10)
        assert info.value.counterexample == [0, 1]

    def test_not_homogeneous(self):
        with pytest.raises(NotHomogeneousError):
            HyperbolicInstance(h=SparsePoly(2, {(1, 0): 1, (0, 0): 1}), e=[1, 0])

    def test_direction_must_not_vanish(self):
        with pytest.raises(HyperbolicError):
            certify_hyperbolic(lorentz_polynomial(3), [1, 1, 0], trials=5)

    def test_direction_length(self):
        with pytest.raises(ShapeError):
            HyperbolicInstance(h=lorentz_polynomial(3), e=[1, 0])

    def test_same_seed_same_certificate(self):
        a = certify_hyperbolic(lorentz_polynomial(3), [1, 0, 0], trials=10, seed=4)
        b = certify_hyperbolic(lorentz_polynomial(3), [1, 0, 0], trials=10, seed=4)
        assert a.cert == b.cert


class TestConeMembership:
    def test_lorentz_cone(self, lorentz3):
        assert cone_member(lorentz3, [2, 1, 1])
        assert not cone_member(lorentz3, [1, 1, 1])
        assert not cone_member(lorentz3, [-2, 0, 0])

    def test_boundary_is_excluded(self, lorentz3):
        """(1, 1, 0) has a zero eigenvalue"""
        assert not cone_member(lorentz3, [1, 1, 0])

    def test_uncertified_instance(self):
        inst = HyperbolicInstance(h=lorentz_polynomial(3), e=[1, 0, 0])
        with pytest.raises(UncertifiedInstanceError):
            cone_member(inst, [2, 1, 1])

    @pytest.mark.parametrize("n", [3, 4])
    def test_product_cone_is_the_open_orthant(self, n):
        inst = certify_hyperbolic(SparsePoly.product_of_variables(n), [1] * n, trials=10)
        assert cone_member(inst, [Fraction(k + 1, 3) for k in range(n)])
        assert not cone_member(inst, [0] + [1] * (n - 1))
        assert not cone_member(inst, [1] * (n - 1) + [-1])
        assert not cone_member(inst, [-1, -1] + [2] * (n - 2))
        assert not cone_member(inst, [-1] * n)

    def test_product_cone_matches_signs_on_random_points(self):
        inst = certify_hyperbolic(SparsePoly.product_of_variables(4), [1, 1, 1, 1], trials=10)
        rng = make_rng(7)
        for _ in range(30):
            x = random_vector(rng, 4)
            assert cone_member(inst, x) == all(c > 0 for c in x)


class TestPolarization:
    def test_product_of_two_variables(self):
        """H_(x1 x2)((1, 0), (0, 1)) = 1/2"""
        h = SparsePoly(2, {(1, 1): 1})
        assert polarized_form(h, [[1, 0], [0, 1]]) == Fraction(1, 2)

    def test_diagonal_recovers_h(self):
        """H(v, ..., v) = h(v)"""
        h = lorentz_polynomial(3)
        assert polarized_form(h, [[2, 1, 1]] * 2) == h((2, 1, 1))

    def test_partial(self):
        """x -> H((1, 0), x) for x1 x2 is x2 / 2"""
        h = SparsePoly(2, {(1, 1): 1})
        assert partial_polarization(h, [[1, 0]]) == SparsePoly(2, {(0, 1): Fraction(1, 2)})

    def test_vector_count(self):
        h = SparsePoly(2, {(1, 1): 1})
        with pytest.raises(ShapeError):
            polarized_form(h, [[1, 0]])
        with pytest.raises(ShapeError):
            partial_polarization(h, [[1, 0], [0, 1]])

    def test_not_homogeneous(self):
        with pytest.raises(NotHomogeneousError):
            polarized_form(SparsePoly(1, {(1,): 1, (0,): 1}), [[1]])

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_product_form_is_a_permanent(self, n):
        """For h = x1...xn, n! H(v_1, ..., v_n) = per of the matrix with columns v_i"""
        rng = make_rng(n)
        for _ in range(5):
            vectors = [random_vector(rng, n) for _ in range(n)]
            value = factorial(n) * polarized_form(SparsePoly.product_of_variables(n), vectors)
            assert value == per_ryser(RMatrix.from_columns(vectors))


class TestGarding:
    def test_derivative_cone_contains_cone(self, lorentz3):
        report = garding_lemma_test(lorentz3, [2, 1, 1], trials=20, points=20)
        assert report.certified
        assert report.passed
        assert report.points == 20

    def test_v_outside_cone(self, lorentz3):
        with pytest.raises(ConeMembershipError):
            garding_lemma_test(lorentz3, [1, 1, 1], trials=5, points=5)

    def test_non_hyperbolic_replacement_is_reported(self, lorentz3):
        """A replacement derivative that is not hyperbolic fails at certification"""
        bad = SparsePoly(3, {(2, 0, 0): 1, (0, 2, 0): 1})
        report = garding_lemma_test(lorentz3, [2, 1, 1], trials=5, points=5, derivative=bad)
        assert not report.passed
        assert not report.certified
        assert report.witnesses[0]["stage"] == "certify"

    def test_product_of_five_variables(self):
        inst = certify_hyperbolic(SparsePoly.product_of_variables(5), [1] * 5, trials=10)
        v = random_positive_vector(make_rng(5), 5, max_denominator=4)
        report = garding_lemma_test(inst, v, trials=10, points=20, seed=1)
        assert report.certified
        assert report.passed

    def test_lorentz_in_four_variables(self):
        inst = certify_hyperbolic(lorentz_polynomial(4), [1, 0, 0, 0], trials=20)
        report = garding_lemma_test(inst, [3, 1, 1, 1], trials=10, points=20, seed=2)
        assert report.certified
        assert report.passed
        assert report.points == 20

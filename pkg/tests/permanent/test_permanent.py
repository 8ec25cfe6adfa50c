import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from alphaperm.enums.permanent_e import PermanentMethod
from alphaperm.numeric.linalg import det_exact, is_psd_exact
from alphaperm.numeric.matrix import RMatrix
from alphaperm.numeric.scalar import ComplexRational
from alphaperm.permanent import (
    Alpha,
    MultiIndex,
    cycle_count,
    cycle_profile,
    det_alpha,
    dilate,
    indices_up_to,
    per,
    per_alpha,
    per_naive,
    per_ryser,
)
from alphaperm.utils.exceptions.codec import ParseError
from alphaperm.utils.exceptions.enumeration import BoundExceededError
from alphaperm.utils.exceptions.matrix import ShapeError
from alphaperm.utils.sampling import make_rng, random_hermitian_psd_matrix, random_psd_matrix

alphas = st.fractions(min_value=-3, max_value=3, max_denominator=5)


def square_matrices(max_size=4):
    entries = st.fractions(min_value=-4, max_value=4, max_denominator=4)
    return st.integers(1, max_size).flatmap(
        lambda n: st.lists(st.lists(entries, min_size=n, max_size=n), min_size=n, max_size=n))


class TestCycles:
    def test_cycle_count(self):
        """A transposition plus a fixed point has two cycles, a 3-cycle has one"""
        assert cycle_count([1, 0, 2]) == 2
        assert cycle_count([1, 2, 0]) == 1
        assert cycle_count([0, 1, 2, 3]) == 4
        assert cycle_count([]) == 0

    def test_not_a_permutation(self):
        with pytest.raises(ShapeError):
            cycle_count([0, 0, 1])

    def test_profile_of_all_ones(self, ones3):
        """S_3 has two 3-cycles, three transpositions and the identity"""
        assert cycle_profile(ones3) == [0, 2, 3, 1]


class TestPermanents:
    def test_all_ones(self, ones3):
        assert per_naive(ones3) == 6
        assert per_ryser(ones3) == 6
        assert per(ones3, PermanentMethod.NAIVE) == 6

    def test_empty_matrix(self):
        """per of the 0 x 0 matrix is 1"""
        assert per_ryser(RMatrix([])) == 1
        assert per_naive(RMatrix([])) == 1

    def test_complex_entries(self):
        """Ryser and enumeration agree over Q(i)"""
        i = ComplexRational(0, 1)
        A = RMatrix([[1, i], [i, 2]])
        assert per_ryser(A) == 1
        assert per_naive(A) == 1

    @settings(max_examples=40, deadline=None)
    @given(square_matrices())
    def test_ryser_matches_enumeration(self, rows):
        A = RMatrix(rows)
        assert per_ryser(A) == per_naive(A)
        assert per_alpha(A, 1) == per_naive(A)

    def test_bound(self, ones3):
        with pytest.raises(BoundExceededError) as info:
            per_naive(ones3, bound=2)
        assert info.value.details["bound"] == 2

    def test_non_square(self):
        with pytest.raises(ShapeError):
            per_ryser(RMatrix([[1, 2]]))

    def test_every_zero_one_matrix_of_order_three(self):
        """Ryser and enumeration agree on all 512 0/1 matrices"""
        for bits in itertools.product((0, 1), repeat=9):
            A = RMatrix([bits[0:3], bits[3:6], bits[6:9]])
            assert per_ryser(A) == per_naive(A), bits

    def test_zero_one_permanents_count_matchings(self):
        """per of a 0/1 matrix counts permutations inside its support; at most 3! = 6"""
        values = {per_ryser(RMatrix([bits[0:3], bits[3:6], bits[6:9]]))
                  for bits in itertools.product((0, 1), repeat=9)}
        assert values == {0, 1, 2, 3, 4, 6}


class TestAlphaPermanents:
    @pytest.mark.parametrize("alpha", [Fraction(-1), Fraction(0), Fraction(1, 2), Fraction(5)])
    def test_all_ones_closed_forms(self, ones3, alpha):
        """per_a(J_3) = a(a+1)(a+2), det_a(J_3) = (1+a)(1+2a)"""
        assert per_alpha(ones3, alpha) == alpha * (alpha + 1) * (alpha + 2)
        assert det_alpha(ones3, alpha) == (1 + alpha) * (1 + 2 * alpha)

    @settings(max_examples=40, deadline=None)
    @given(square_matrices())
    def test_det_minus_one_is_determinant(self, rows):
        A = RMatrix(rows)
        assert det_alpha(A, -1) == det_exact(A)

    def test_det_zero_is_diagonal_product(self, small_matrix):
        assert det_alpha(small_matrix, 0) == -2

    @settings(max_examples=30, deadline=None)
    @given(square_matrices(3), alphas.filter(lambda a: a != 0))
    def test_det_alpha_relates_to_per(self, rows, alpha):
        """det_a(A) = a^n per_{1/a}(A)"""
        A = RMatrix(rows)
        assert det_alpha(A, alpha) == alpha ** A.rows * per_alpha(A, 1 / alpha)

    def test_alpha_accepts_strings(self, ones3):
        assert per_alpha(ones3, "1/2") == Fraction(15, 8)

    @pytest.mark.parametrize("seed", range(5))
    @pytest.mark.parametrize("alpha", [Fraction(-1, 2), Fraction(1, 3), Fraction(2)])
    def test_hermitian_psd_values_are_real(self, seed, alpha):
        A = random_hermitian_psd_matrix(make_rng(seed), 3)
        assert isinstance(per_alpha(A, alpha), Fraction)
        assert isinstance(det_alpha(A, alpha), Fraction)

    @settings(max_examples=25, deadline=None)
    @given(square_matrices(4), alphas, st.randoms(use_true_random=False))
    def test_simultaneous_permutation_invariance(self, rows, alpha, random):
        """per_a(P A P^T) = per_a(A) and likewise for det_a"""
        A = RMatrix(rows)
        p = list(range(A.rows))
        random.shuffle(p)
        B = RMatrix([[A[p[i], p[j]] for j in range(A.rows)] for i in range(A.rows)])
        assert per_alpha(B, alpha) == per_alpha(A, alpha)
        assert det_alpha(B, alpha) == det_alpha(A, alpha)


class TestAlpha:
    def test_special_forms(self):
        """-1/3 = -1/(m+1) with m = 2, 2/5 = 2/(m+1) with m = 4"""
        assert Alpha.of("-1/3").neg_reciprocal() == 2
        assert Alpha.of("2/5").two_over() == 4
        assert Alpha.of("1/4").pos_reciprocal() == 3
        assert Alpha.of(3).pos_reciprocal() is None
        assert Alpha.of(1).two_over() == 1

    def test_beta(self):
        assert Alpha.of(5).beta == Fraction(1, 5)
        with pytest.raises(ZeroDivisionError):
            Alpha.of(0).beta


class TestMultiIndex:
    def test_arithmetic(self):
        n = MultiIndex([2, 0, 3])
        assert n.total == 5
        assert n.factorial == 12
        assert n + MultiIndex([1, 1, 1]) == MultiIndex([3, 1, 4])

    def test_rejects_negative_parts(self):
        with pytest.raises(ParseError):
            MultiIndex([1, -1])
        with pytest.raises(ParseError):
            MultiIndex.parse("1,x")

    def test_graded_lex_order(self):
        """Degree first, then larger leading exponents"""
        assert list(indices_up_to(2, 2)) == [
            (0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2),
        ]

    def test_count(self):
        """C(3 + 3, 3) indices of length 3 and degree at most 3"""
        assert len(list(indices_up_to(3, 3))) == 20


class TestDilation:
    def test_blocks(self):
        A = RMatrix([[1, 2], [3, 4]])
        assert dilate(A, (2, 1)) == RMatrix([[1, 1, 2], [1, 1, 2], [3, 3, 4]])

    def test_zero_parts_drop_rows(self):
        assert dilate(RMatrix([[1, 2], [3, 4]]), (0, 1)) == RMatrix([[4]])

    def test_keeps_structure(self, psd_gram):
        assert dilate(psd_gram, (1, 2, 0)).symmetric

    def test_length_mismatch(self):
        with pytest.raises(ShapeError):
            dilate(RMatrix([[1]]), (1, 1))

    def test_dilated_all_ones(self):
        """J_1 dilated by (3) is J_3"""
        assert per_alpha(dilate(RMatrix([[1]]), (3,)), 2) == 24

    @pytest.mark.parametrize("seed", range(8))
    def test_dilation_keeps_psd(self, seed):
        rng = make_rng(seed)
        A = random_psd_matrix(rng, 3, rank=int(rng.integers(1, 4)))
        n = [int(k) for k in rng.integers(1, 3, size=3)]
        assert is_psd_exact(dilate(A, n))

    def test_hermitian_dilation_keeps_psd(self):
        A = random_hermitian_psd_matrix(make_rng(1), 2)
        D = dilate(A, (2, 1))
        assert D.hermitian
        assert is_psd_exact(D)

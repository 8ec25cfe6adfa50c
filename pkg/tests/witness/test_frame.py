from fractions import Fraction

import pytest

from alphaperm.enums.field_e import ScalarField
from alphaperm.numeric.linalg import is_psd_exact, rank_exact
from alphaperm.numeric.matrix import RMatrix
from alphaperm.numeric.scalar import ComplexRational
from alphaperm.series import SparsePoly, det_I_minus_XA
from alphaperm.witness import (
    frame_matrix,
    frame_size,
    spanning_rank_one_frame,
    witness_gram,
    witness_polynomial,
)
from alphaperm.utils.exceptions.witness import FrameError


class TestFrame:
    def test_sizes(self):
        assert frame_size(2) == 3
        assert frame_size(3) == 6
        assert frame_size(2, ScalarField.COMPLEX) == 4
        assert frame_size(3, "complex") == 9

    def test_real_frame(self):
        """e_1, e_2 and e_1 + e_2"""
        assert spanning_rank_one_frame(2) == [[1, 0], [0, 1], [1, 1]]

    def test_complex_frame_adds_imaginary_pairs(self):
        frame = spanning_rank_one_frame(2, ScalarField.COMPLEX)
        assert len(frame) == 4
        assert frame[3] == [1, ComplexRational(0, 1)]

    @pytest.mark.parametrize("m", [1, 2, 3, 4])
    @pytest.mark.parametrize("field", [ScalarField.REAL, ScalarField.COMPLEX])
    def test_frame_has_spanning_size(self, m, field):
        assert len(spanning_rank_one_frame(m, field)) == frame_size(m, field)

    def test_m_must_be_positive(self):
        with pytest.raises(FrameError):
            spanning_rank_one_frame(0)


class TestGram:
    def test_one_dimensional(self):
        assert witness_gram(1) == RMatrix([[1]])

    def test_two_dimensional(self, psd_gram):
        """A = [[2, 1], [1, 2]] for unit weights"""
        frame = spanning_rank_one_frame(2)
        assert frame_matrix(frame, [1, 1, 1]) == RMatrix([[2, 1], [1, 2]])
        assert witness_gram(2) == psd_gram

    @pytest.mark.parametrize("field", [ScalarField.REAL, ScalarField.COMPLEX])
    def test_gram_is_psd_of_rank_m(self, field):
        G = witness_gram(3, field)
        assert is_psd_exact(G)
        assert rank_exact(G) == 3

    def test_weighted_gram(self):
        """With weights y, sum_i y_i G_ii = m"""
        y = [Fraction(1, 2), 3, 2]
        G = witness_gram(2, y=y)
        assert sum(w * G[i, i] for i, w in enumerate(y)) == 2

    def test_weights_are_checked(self):
        frame = spanning_rank_one_frame(2)
        with pytest.raises(FrameError):
            frame_matrix(frame, [1, 1])
        with pytest.raises(FrameError):
            frame_matrix(frame, [1, 0, 1])


class TestWitnessPolynomial:
    def test_unit_weights(self, psd_gram):
        """det(A - sum x_i v_i v_i^T)/det(A) for the 2-dimensional frame"""
        P = witness_polynomial(spanning_rank_one_frame(2), [1, 1, 1])
        third = Fraction(1, 3)
        expected = SparsePoly(3, {
            (0, 0, 0): 1,
            (1, 0, 0): -2 * third, (0, 1, 0): -2 * third, (0, 0, 1): -2 * third,
            (1, 1, 0): third, (1, 0, 1): third, (0, 1, 1): third,
        })
        assert P == expected
        assert P == det_I_minus_XA(psd_gram)

    @pytest.mark.parametrize("field", [ScalarField.REAL, ScalarField.COMPLEX])
    def test_matches_gram_determinant(self, field):
        """det(A - sum x_i v_i v_i^*)/det(A) = det(I - XG) for random-looking weights"""
        frame = spanning_rank_one_frame(2, field)
        y = [Fraction(k + 1, 2) for k in range(len(frame))]
        assert witness_polynomial(frame, y, field) == det_I_minus_XA(witness_gram(2, field, y, frame))

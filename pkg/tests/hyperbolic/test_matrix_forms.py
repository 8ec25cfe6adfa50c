from fractions import Fraction

import pytest

from alphaperm.hyperbolic import (
    certify_hyperbolic,
    cone_member,
    flatten_hermitian,
    flatten_symmetric,
    hermitian_det_polynomial,
    mixed_discriminant,
    polarized_form,
    symmetric_det_polynomial,
    unflatten_hermitian,
    unflatten_symmetric,
)
from alphaperm.numeric.linalg import det_exact
from alphaperm.numeric.matrix import RMatrix
from alphaperm.numeric.scalar import ComplexRational
from alphaperm.series import SparsePoly
from alphaperm.utils.exceptions.matrix import ShapeError, StructureError


class TestDeterminantPolynomials:
    def test_symmetric_two_by_two(self):
        """det [[x0, x1], [x1, x2]] = x0 x2 - x1^2"""
        assert symmetric_det_polynomial(2) == SparsePoly(3, {(1, 0, 1): 1, (0, 2, 0): -1})

    def test_hermitian_two_by_two(self):
        """det [[x0, x1 + i x2], [x1 - i x2, x3]] = x0 x3 - x1^2 - x2^2"""
        expected = SparsePoly(4, {(1, 0, 0, 1): 1, (0, 2, 0, 0): -1, (0, 0, 2, 0): -1})
        assert hermitian_det_polynomial(2) == expected

    def test_evaluates_to_determinant(self, psd_gram):
        assert symmetric_det_polynomial(3)(flatten_symmetric(psd_gram)) == det_exact(psd_gram)
        H = RMatrix([[2, ComplexRational(1, 1)], [ComplexRational(1, -1), 3]], hermitian=True)
        assert hermitian_det_polynomial(2)(flatten_hermitian(H)) == det_exact(H) == 4

    def test_flattening(self):
        S = unflatten_symmetric([1, 2, 3], 2)
        assert S == RMatrix([[1, 2], [2, 3]])
        assert flatten_symmetric(S) == [1, 2, 3]
        H = unflatten_hermitian([1, 2, -1, 5], 2)
        assert H[0, 1] == ComplexRational(2, -1)
        assert H[1, 0] == ComplexRational(2, 1)

    def test_flattening_checks_structure(self):
        with pytest.raises(StructureError):
            flatten_symmetric(RMatrix([[1, 2], [3, 4]]))
        with pytest.raises(ShapeError):
            unflatten_symmetric([1, 2], 2)

    def test_psd_cone(self):
        """The identity is in the cone of det over symmetric matrices, a rank-one matrix is not"""
        inst = certify_hyperbolic(symmetric_det_polynomial(2), [1, 0, 1], trials=20)
        assert cone_member(inst, [2, 1, 1])
        assert not cone_member(inst, [1, 1, 1])


class TestMixedDiscriminant:
    def test_identity(self):
        assert mixed_discriminant([RMatrix.identity(2)] * 2) == 1

    def test_complementary_projections(self):
        assert mixed_discriminant([RMatrix.diagonal([1, 0]), RMatrix.diagonal([0, 1])]) == Fraction(1, 2)

    def test_diagonal_copies_give_determinant(self, psd_gram):
        """D(A, ..., A) = det A"""
        assert mixed_discriminant([psd_gram] * 3) == det_exact(psd_gram)

    def test_agrees_with_polarized_determinant(self):
        A = RMatrix([[2, 1], [1, 1]], symmetric=True)
        B = RMatrix([[1, 0], [0, 3]], symmetric=True)
        h = symmetric_det_polynomial(2)
        assert mixed_discriminant([A, B]) == polarized_form(h, [flatten_symmetric(A), flatten_symmetric(B)])

    def test_shapes(self):
        with pytest.raises(ShapeError):
            mixed_discriminant([RMatrix.identity(2)])

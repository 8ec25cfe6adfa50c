from alphaperm.hyperbolic.polarization import directional_derivative, polarized_form, partial_polarization
from alphaperm.hyperbolic.instance import HyperbolicInstance, certify_hyperbolic, cone_member
from alphaperm.hyperbolic.matrix_forms import (
    symmetric_det_polynomial,
    hermitian_det_polynomial,
    flatten_symmetric,
    unflatten_symmetric,
    flatten_hermitian,
    unflatten_hermitian,
    mixed_discriminant,
)
from alphaperm.hyperbolic.garding import garding_lemma_test

__all__ = [
    'directional_derivative',
    'polarized_form',
    'partial_polarization',
    'HyperbolicInstance',
    'certify_hyperbolic',
    'cone_member',
    'symmetric_det_polynomial',
    'hermitian_det_polynomial',
    'flatten_symmetric',
    'unflatten_symmetric',
    'flatten_hermitian',
    'unflatten_hermitian',
    'mixed_discriminant',
    'garding_lemma_test',
]

from alphaperm.numeric.scalar import Rational, ComplexRational, parse_scalar, parse_rational, format_scalar
from alphaperm.numeric.matrix import RMatrix, outer
from alphaperm.numeric.unipoly import UniPoly, poly_gcd
from alphaperm.numeric.linalg import (
    det_exact,
    char_poly,
    is_psd_exact,
    sylvester_check,
    rank_exact,
    inverse_exact,
    principal_minor_sums,
)
from alphaperm.numeric.sturm import sturm_real_rooted, sturm_roots_all_negative, count_real_roots, squarefree_part

__all__ = [
    'Rational',
    'ComplexRational',
    'parse_scalar',
    'parse_rational',
    'format_scalar',
    'RMatrix',
    'outer',
    'UniPoly',
    'poly_gcd',
    'det_exact',
    'char_poly',
    'is_psd_exact',
    'sylvester_check',
    'rank_exact',
    'inverse_exact',
    'principal_minor_sums',
    'sturm_real_rooted',
    'sturm_roots_all_negative',
    'count_real_roots',
    'squarefree_part',
]

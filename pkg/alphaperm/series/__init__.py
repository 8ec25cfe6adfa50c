from alphaperm.series.sparse_poly import SparsePoly, polynomial_det, elementary_symmetric_poly, lorentz_polynomial
from alphaperm.series.truncated import (
    TruncatedSeries,
    series_log,
    series_exp,
    series_pow,
    iter_pow_layers,
    box_pow_coefficient,
)
from alphaperm.series.macmahon import (
    det_I_minus_XA,
    macmahon_per_coeffs,
    macmahon_det_coeffs,
    macmahon_verify,
    coefficients_to_json,
    coefficients_from_json,
)

__all__ = [
    'SparsePoly',
    'polynomial_det',
    'elementary_symmetric_poly',
    'lorentz_polynomial',
    'TruncatedSeries',
    'series_log',
    'series_exp',
    'series_pow',
    'iter_pow_layers',
    'box_pow_coefficient',
    'det_I_minus_XA',
    'macmahon_per_coeffs',
    'macmahon_det_coeffs',
    'macmahon_verify',
    'coefficients_to_json',
    'coefficients_from_json',
]

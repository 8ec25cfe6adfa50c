from alphaperm.concavity.quotient import (
    QuotientSpec,
    bapat_quotient,
    hyperbolic_quotient,
    evaluate_quotient,
    elementary_symmetric,
    symmetric_mean_ratio,
)
from alphaperm.concavity.scan import midpoint_concavity_scan, sample_domain_point
from alphaperm.concavity.hessian import hessian_nsd_check

__all__ = [
    'QuotientSpec',
    'bapat_quotient',
    'hyperbolic_quotient',
    'evaluate_quotient',
    'elementary_symmetric',
    'symmetric_mean_ratio',
    'midpoint_concavity_scan',
    'sample_domain_point',
    'hessian_nsd_check',
]

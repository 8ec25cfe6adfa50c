from alphaperm.numeric.matrix import RMatrix
from alphaperm.permanent.permanent import per, per_alpha, det_alpha
from alphaperm.permanent.dilation import dilate
from alphaperm.series.macmahon import macmahon_verify
from alphaperm.hyperbolic.instance import certify_hyperbolic, cone_member
from alphaperm.witness.sets import classify_alpha
from alphaperm.witness.search import Witness, find_witness

__all__ = [
    'RMatrix',
    'per',
    'per_alpha',
    'det_alpha',
    'dilate',
    'macmahon_verify',
    'certify_hyperbolic',
    'cone_member',
    'classify_alpha',
    'Witness',
    'find_witness',
]

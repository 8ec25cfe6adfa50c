from alphaperm.permanent.multi_index import MultiIndex, indices_of_degree, indices_up_to
from alphaperm.permanent.alpha import Alpha
from alphaperm.permanent.permanent import (
    cycle_count,
    per_naive,
    per_ryser,
    cycle_profile,
    per_alpha,
    det_alpha,
    per,
)
from alphaperm.permanent.dilation import dilate

__all__ = [
    'MultiIndex',
    'indices_of_degree',
    'indices_up_to',
    'Alpha',
    'cycle_count',
    'per_naive',
    'per_ryser',
    'cycle_profile',
    'per_alpha',
    'det_alpha',
    'per',
    'dilate',
]

from alphaperm.witness.sets import AlphaClass, C_contains, R_contains, classify_alpha, minimal_frame_dimension
from alphaperm.witness.frame import frame_size, spanning_rank_one_frame
from alphaperm.witness.search import (
    Witness,
    check_witness,
    concentrated_indices,
    dump_witness,
    find_witness,
    frame_matrix,
    load_witness,
    save_witness,
    witness_gram,
    witness_polynomial,
)
from alphaperm.witness.nonnegativity import nonnegativity_scan

__all__ = [
    'AlphaClass',
    'C_contains',
    'R_contains',
    'classify_alpha',
    'minimal_frame_dimension',
    'frame_size',
    'spanning_rank_one_frame',
    'Witness',
    'check_witness',
    'concentrated_indices',
    'dump_witness',
    'find_witness',
    'frame_matrix',
    'load_witness',
    'save_witness',
    'witness_gram',
    'witness_polynomial',
    'nonnegativity_scan',
]

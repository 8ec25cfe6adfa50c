from typing import Sequence

from alphaperm.numeric.matrix import RMatrix
from alphaperm.permanent.multi_index import MultiIndex
from alphaperm.utils.exceptions.matrix import ShapeError


def dilate(A: RMatrix, n: Sequence[int]) -> RMatrix:
    """
    A[n]: entry a_ij replaced by an n_i x n_j block of copies of a_ij.

    Parts equal to 0 drop the row and column; the symmetric / hermitian
    flags carry over.
    """
    n = n if isinstance(n, MultiIndex) else MultiIndex(n)
    if not A.is_square or len(n) != A.rows:
        raise ShapeError(f"multi-index of length {len(n)} for a {A.shape} matrix",
                         precondition="len(n) == matrix size")
    blocks = [i for i, k in enumerate(n) for _ in range(k)]
    return RMatrix([[A.entries[i][j] for j in blocks] for i in blocks],
                   symmetric=A.symmetric, hermitian=A.hermitian)

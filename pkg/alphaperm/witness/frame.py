"""
Rank-one frames: vectors v_1..v_n in F^m whose outer products v_i v_i^*
span the space of real symmetric (F = R) or hermitian (F = C) m x m
matrices.
"""
from fractions import Fraction
from itertools import combinations
from typing import List

from alphaperm.enums.field_e import ScalarField
from alphaperm.hyperbolic.matrix_forms import flatten_hermitian, flatten_symmetric, symmetric_dimension
from alphaperm.numeric.linalg import rank_exact
from alphaperm.numeric.matrix import RMatrix, outer
from alphaperm.numeric.scalar import ComplexRational, Scalar
from alphaperm.utils.exceptions.witness import FrameError

Vector = List[Scalar]


def frame_size(m: int, field=ScalarField.REAL) -> int:
    """m(m+1)/2 for symmetric, m^2 for hermitian"""
    return symmetric_dimension(m) if ScalarField(field) == ScalarField.REAL else m * m


def _unit(m: int, i: int) -> Vector:
    return [Fraction(1) if k == i else Fraction(0) for k in range(m)]


def spanning_rank_one_frame(m: int, field=ScalarField.REAL) -> List[Vector]:
    """
    {e_i} u {e_i + e_j : i < j}, plus {e_i + i e_j : i < j} over C.

    The spanning property is checked by exact rank.
    """
    if m < 1:
        raise FrameError(f"m = {m}")
    field = ScalarField(field)
    frame = [_unit(m, i) for i in range(m)]
    pairs = list(combinations(range(m), 2))
    frame += [[a + b for a, b in zip(_unit(m, i), _unit(m, j))] for i, j in pairs]
    if field == ScalarField.COMPLEX:
        imag = ComplexRational(0, 1)
        frame += [[a + imag * b if b else a for a, b in zip(_unit(m, i), _unit(m, j))] for i, j in pairs]

    flatten = flatten_symmetric if field == ScalarField.REAL else flatten_hermitian
    flag = {"symmetric": True} if field == ScalarField.REAL else {"hermitian": True}
    coordinates = RMatrix([flatten(RMatrix(outer(v, v).entries, **flag)) for v in frame])
    if rank_exact(coordinates) != frame_size(m, field):
        raise FrameError(f"outer products of {len(frame)} vectors do not span", m=m, field=field.value)
    return frame

"""
Exact linear algebra over Fraction / ComplexRational entries.
"""
from fractions import Fraction
from typing import List

from alphaperm.numeric.matrix import RMatrix
from alphaperm.numeric.scalar import Scalar, real_if_possible, ComplexRational
from alphaperm.numeric.unipoly import UniPoly
from alphaperm.utils.exceptions.matrix import MatrixError, ShapeError, SingularMatrixError, StructureError


def _require_square(A: RMatrix, operation: str):
    if not A.is_square:
        raise ShapeError(f"{operation} needs a square matrix, got {A.shape}", precondition="square matrix")


def _working_copy(A: RMatrix) -> List[List[Scalar]]:
    return [list(row) for row in A.entries]


def det_exact(A: RMatrix) -> Scalar:
    """
    Determinant by Bareiss fraction-free elimination.

    Every division performed is exact, so no rounding ever happens; over
    Fractions the intermediate entries stay small.
    """
    _require_square(A, "det_exact")
    n = A.rows
    if n == 0:
        return Fraction(1)
    M = _working_copy(A)
    sign = 1
    prev: Scalar = Fraction(1)
    for k in range(n - 1):
        if M[k][k] == 0:
            pivot = next((i for i in range(k + 1, n) if M[i][k] != 0), None)
            if pivot is None:
                return Fraction(0)
            M[k], M[pivot] = M[pivot], M[k]
            sign = -sign
        pkk = M[k][k]
        for i in range(k + 1, n):
            mik = M[i][k]
            row_i, row_k = M[i], M[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pkk - mik * row_k[j]) / prev
        prev = pkk
    result = M[n - 1][n - 1]
    return real_if_possible(result if sign > 0 else -result)


def char_poly(A: RMatrix) -> UniPoly:
    """
    det(tI - A) via the Faddeev-LeVerrier recurrence.

    M_1 = I, c_{n-k} = -tr(A M_k)/k, M_{k+1} = A M_k + c_{n-k} I.
    """
    _require_square(A, "char_poly")
    n = A.rows
    a = A.entries
    coeffs: List[Scalar] = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    M = [[Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)]
    for k in range(1, n + 1):
        AM = [[sum((a[i][l] * M[l][j] for l in range(n)), Fraction(0)) for j in range(n)] for i in range(n)]
        c = -sum((AM[i][i] for i in range(n)), Fraction(0)) / k
        coeffs[n - k] = c
        if k < n:
            M = AM
            for i in range(n):
                M[i][i] = M[i][i] + c

    out = []
    for c in coeffs:
        c = real_if_possible(c)
        if isinstance(c, ComplexRational):
            raise MatrixError("characteristic polynomial has non-real coefficients",
                              precondition="real or hermitian matrix")
        out.append(c)
    return UniPoly(out)


def principal_minor_sums(A: RMatrix) -> List[Fraction]:
    """[c_0, c_1, ..., c_n] with c_k the sum of all k x k principal minors"""
    p = char_poly(A)
    n = A.rows
    return [(-1) ** k * p[n - k] for k in range(n + 1)]


def is_psd_exact(A: RMatrix) -> bool:
    """
    Exact positive semidefiniteness of a symmetric / hermitian matrix.

    With det(tI - A) = t^n - c_1 t^{n-1} + c_2 t^{n-2} - ..., A is PSD iff
    every c_k >= 0.
    """
    _require_square(A, "is_psd_exact")
    if not A.is_self_adjoint:
        raise StructureError("is_psd_exact needs the symmetric (real) or hermitian flag",
                             precondition="symmetric or hermitian flag")
    return all(c >= 0 for c in principal_minor_sums(A))


def sylvester_check(A: RMatrix, B: RMatrix) -> bool:
    """det(I - AB) == det(I - BA) for A m x n and B n x m"""
    if A.cols != B.rows or A.rows != B.cols:
        raise ShapeError(f"need m x n and n x m, got {A.shape} and {B.shape}", precondition="compatible shapes")
    left = det_exact(RMatrix.identity(A.rows) - A @ B)
    right = det_exact(RMatrix.identity(B.rows) - B @ A)
    return left == right


def _row_echelon(M: List[List[Scalar]]) -> int:
    """In-place Gaussian elimination; returns the rank"""
    rows = len(M)
    cols = len(M[0]) if rows else 0
    rank = 0
    for c in range(cols):
        pivot = next((r for r in range(rank, rows) if M[r][c] != 0), None)
        if pivot is None:
            continue
        M[rank], M[pivot] = M[pivot], M[rank]
        p = M[rank][c]
        for r in range(rank + 1, rows):
            if M[r][c] != 0:
                f = M[r][c] / p
                M[r] = [x - f * y for x, y in zip(M[r], M[rank])]
        rank += 1
        if rank == rows:
            break
    return rank


def rank_exact(A: RMatrix) -> int:
    if A.rows == 0 or A.cols == 0:
        return 0
    return _row_echelon(_working_copy(A))


def inverse_exact(A: RMatrix) -> RMatrix:
    """Gauss-Jordan inverse"""
    _require_square(A, "inverse_exact")
    n = A.rows
    M = [list(row) + [Fraction(1) if i == j else Fraction(0) for j in range(n)]
         for i, row in enumerate(A.entries)]
    for c in range(n):
        pivot = next((r for r in range(c, n) if M[r][c] != 0), None)
        if pivot is None:
            raise SingularMatrixError(f"no pivot in column {c}")
        M[c], M[pivot] = M[pivot], M[c]
        p = M[c][c]
        M[c] = [x / p for x in M[c]]
        for r in range(n):
            if r != c and M[r][c] != 0:
                f = M[r][c]
                M[r] = [x - f * y for x, y in zip(M[r], M[c])]
    inverse = [[real_if_possible(x) for x in row[n:]] for row in M]
    return RMatrix(inverse, symmetric=A.symmetric, hermitian=A.hermitian)

"""
Determinants over symmetric / hermitian matrix variables, and mixed
discriminants.

Symmetric n x n matrices are flattened to their n(n+1)/2 upper-triangular
entries in row-major order (x_ij = x_ji). Hermitian matrices use n^2 real
coordinates: the diagonal entry for i == j, and (Re, Im) of the entry for
i < j, again row-major.
"""
from itertools import combinations
from math import factorial
from typing import Any, List, Sequence

from alphaperm.numeric.linalg import det_exact
from alphaperm.numeric.matrix import RMatrix
from alphaperm.numeric.scalar import ComplexRational, Scalar, parse_rational, real_if_possible
from alphaperm.series.sparse_poly import SparsePoly, polynomial_det
from alphaperm.utils.exceptions.matrix import ShapeError, StructureError


def _upper_pairs(n: int):
    return [(i, j) for i in range(n) for j in range(i, n)]


def symmetric_dimension(n: int) -> int:
    return n * (n + 1) // 2


def flatten_symmetric(S: RMatrix) -> List[Scalar]:
    if not S.symmetric and not S.detect_structure().symmetric:
        raise StructureError("flattening needs a symmetric matrix", precondition="symmetric")
    return [S[i, j] for i, j in _upper_pairs(S.rows)]


def unflatten_symmetric(x: Sequence[Any], n: int) -> RMatrix:
    if len(x) != symmetric_dimension(n):
        raise ShapeError(f"{len(x)} coordinates for a symmetric {n}x{n} matrix",
                         precondition="n(n+1)/2 coordinates")
    rows = [[0] * n for _ in range(n)]
    for value, (i, j) in zip(x, _upper_pairs(n)):
        rows[i][j] = rows[j][i] = value
    return RMatrix(rows, symmetric=True)


def symmetric_det_polynomial(n: int) -> SparsePoly:
    """det(X) for symmetric X in the flattened coordinates"""
    nvars = symmetric_dimension(n)
    index = {pair: k for k, pair in enumerate(_upper_pairs(n))}
    entries = [[SparsePoly.variable(nvars, index[(min(i, j), max(i, j))]) for j in range(n)] for i in range(n)]
    return polynomial_det(entries)


def flatten_hermitian(H: RMatrix) -> List[Scalar]:
    if not H.hermitian and not H.detect_structure().hermitian:
        raise StructureError("flattening needs a hermitian matrix", precondition="hermitian")
    out: List[Scalar] = []
    for i, j in _upper_pairs(H.rows):
        v = H[i, j]
        if i == j:
            out.append(real_if_possible(v))
        elif isinstance(v, ComplexRational):
            out.extend([v.re, v.im])
        else:
            out.extend([v, parse_rational(0)])
    return out


def unflatten_hermitian(x: Sequence[Any], n: int) -> RMatrix:
    if len(x) != n * n:
        raise ShapeError(f"{len(x)} coordinates for a hermitian {n}x{n} matrix", precondition="n^2 coordinates")
    rows: List[List[Any]] = [[0] * n for _ in range(n)]
    values = iter(x)
    for i, j in _upper_pairs(n):
        if i == j:
            rows[i][i] = next(values)
        else:
            z = ComplexRational(parse_rational(next(values)), parse_rational(next(values)))
            rows[i][j], rows[j][i] = z, z.conjugate()
    return RMatrix(rows, hermitian=True)


def hermitian_det_polynomial(n: int) -> SparsePoly:
    """det(X) for hermitian X in the flattened real coordinates; real coefficients"""
    nvars = n * n
    entries: List[List[SparsePoly]] = [[SparsePoly.zero(nvars)] * n for _ in range(n)]
    k = 0
    imag = ComplexRational(0, 1)
    for i, j in _upper_pairs(n):
        if i == j:
            entries[i][i] = SparsePoly.variable(nvars, k)
            k += 1
        else:
            re, im = SparsePoly.variable(nvars, k), SparsePoly.variable(nvars, k + 1)
            entries[i][j] = re + im.scale(imag)
            entries[j][i] = re - im.scale(imag)
            k += 2
    return polynomial_det(entries)


def mixed_discriminant(matrices: Sequence[RMatrix]) -> Scalar:
    """
    H(A_1, ..., A_n) = (1/n!) sum_{S subset [n]} (-1)^(n-|S|) det(sum_{i in S} A_i)
    """
    n = len(matrices)
    if n == 0 or any(A.shape != (n, n) for A in matrices):
        raise ShapeError(f"need {n} matrices of shape {n}x{n}", precondition="n matrices, each n x n")
    total: Scalar = parse_rational(0)
    for size in range(1, n + 1):
        for subset in combinations(range(n), size):
            acc = matrices[subset[0]]
            for i in subset[1:]:
                acc = acc + matrices[i]
            term = det_exact(acc)
            total = total + (term if (n - size) % 2 == 0 else -term)
    return real_if_possible(total / factorial(n))

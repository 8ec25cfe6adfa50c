"""
Permanents, alpha-permanents and alpha-determinants.

per_alpha(A) = sum over sigma of alpha^c(sigma) prod a_{i sigma(i)} where
c(sigma) counts disjoint cycles. Everything here is computed from
:func:`cycle_profile`, the coefficient list of per_alpha(A) as a polynomial
in alpha.
"""
from fractions import Fraction
from math import lcm
from typing import Iterator, List, Optional, Sequence, Tuple

from alphaperm.config.config import get_global_config
from alphaperm.enums.permanent_e import PermanentMethod
from alphaperm.numeric.matrix import RMatrix
from alphaperm.numeric.scalar import Scalar, real_if_possible
from alphaperm.permanent.alpha import Alpha
from alphaperm.utils.exceptions.enumeration import BoundExceededError
from alphaperm.utils.exceptions.matrix import ShapeError


def cycle_count(sigma: Sequence[int]) -> int:
    """
    Number of disjoint cycles of a permutation given in one-line notation
    on {0, ..., n-1}.
    """
    n = len(sigma)
    if sorted(sigma) != list(range(n)):
        raise ShapeError(f"{list(sigma)} is not a permutation of 0..{n - 1}", precondition="bijection")
    seen = [False] * n
    cycles = 0
    for start in range(n):
        if seen[start]:
            continue
        cycles += 1
        i = start
        while not seen[i]:
            seen[i] = True
            i = sigma[i]
    return cycles


def _check_square_and_bound(A: RMatrix, bound: Optional[int], default: int, operation: str) -> None:
    if not A.is_square:
        raise ShapeError(f"{operation} needs a square matrix, got {A.shape}", precondition="square matrix")
    bound = default if bound is None else bound
    if A.rows > bound:
        raise BoundExceededError(f"{operation} on a {A.rows}x{A.rows} matrix", size=A.rows, bound=bound)


def _scaled_rows(A: RMatrix) -> Tuple[List[List], int]:
    """
    Real matrices are cleared of denominators: the rows of L*A as ints and
    L^n, so the enumeration runs on machine integers.
    """
    if A.is_complex:
        return [list(row) for row in A.entries], 1
    L = 1
    for row in A.entries:
        for v in row:
            L = lcm(L, v.denominator)
    rows = [[int(v * L) for v in row] for row in A.entries]
    return rows, L ** A.rows


def _terms(rows: List[List]) -> Iterator[Tuple[Tuple[int, ...], object]]:
    """Depth-first over row assignments, skipping zero entries"""
    n = len(rows)
    used = [False] * n
    prefix: List[int] = []

    def walk(i: int, product):
        if i == n:
            yield tuple(prefix), product
            return
        row = rows[i]
        for j in range(n):
            if used[j] or not row[j]:
                continue
            used[j] = True
            prefix.append(j)
            yield from walk(i + 1, product * row[j])
            prefix.pop()
            used[j] = False

    yield from walk(0, 1)


def per_naive(A: RMatrix, bound: Optional[int] = None) -> Scalar:
    """Permanent by permutation enumeration"""
    _check_square_and_bound(A, bound, get_global_config().enumeration.naive_bound, "per_naive")
    rows, scale = _scaled_rows(A)
    total = sum((p for _, p in _terms(rows)), 0)
    return _unscale(total, scale)


def per_ryser(A: RMatrix, bound: Optional[int] = None) -> Scalar:
    """
    Ryser's formula, per(A) = (-1)^n sum_S (-1)^|S| prod_i sum_{j in S} a_ij,
    walking the subsets S in Gray-code order so each step adds or removes one
    column from the running row sums.
    """
    _check_square_and_bound(A, bound, get_global_config().enumeration.ryser_bound, "per_ryser")
    n = A.rows
    if n == 0:
        return Fraction(1)
    rows, scale = _scaled_rows(A)
    row_sums = [0] * n
    in_set = [False] * n
    total = 0
    size = 0
    for k in range(1, 1 << n):
        # the bit that flips between gray(k-1) and gray(k)
        j = (k & -k).bit_length() - 1
        if in_set[j]:
            in_set[j] = False
            size -= 1
            for i in range(n):
                row_sums[i] -= rows[i][j]
        else:
            in_set[j] = True
            size += 1
            for i in range(n):
                row_sums[i] += rows[i][j]
        product = 1
        for s in row_sums:
            if not s:
                product = 0
                break
            product *= s
        total += -product if size % 2 else product
    if n % 2:
        total = -total
    return _unscale(total, scale)


def _unscale(total, scale: int) -> Scalar:
    if isinstance(total, int):
        return Fraction(total, scale)
    return real_if_possible(total / scale)


def cycle_profile(A: RMatrix, bound: Optional[int] = None) -> List[Scalar]:
    """
    [p_0, ..., p_n] with p_c the sum of prod a_{i sigma(i)} over permutations
    with exactly c cycles, so per_alpha(A) = sum_c alpha^c p_c.
    """
    _check_square_and_bound(A, bound, get_global_config().enumeration.naive_bound, "cycle_profile")
    n = A.rows
    rows, scale = _scaled_rows(A)
    profile = [0] * (n + 1)
    for sigma, product in _terms(rows):
        profile[cycle_count(sigma)] += product
    return [_unscale(p, scale) for p in profile]


def _horner(coefficients: Sequence[Scalar], x: Fraction) -> Scalar:
    acc: Scalar = Fraction(0)
    for c in reversed(coefficients):
        acc = acc * x + c
    return real_if_possible(acc)


def per_alpha(A: RMatrix, alpha, bound: Optional[int] = None) -> Scalar:
    """alpha-permanent, exact"""
    alpha = Alpha.of(alpha)
    return _horner(cycle_profile(A, bound), alpha.value)


def det_alpha(A: RMatrix, alpha, bound: Optional[int] = None) -> Scalar:
    """
    alpha-determinant via the division-free expansion
    sum_sigma alpha^(n - c(sigma)) prod a_{i sigma(i)}; alpha = 0 gives the
    diagonal product.
    """
    alpha = Alpha.of(alpha)
    profile = cycle_profile(A, bound)
    return _horner(list(reversed(profile)), alpha.value)


def per(A: RMatrix, method: PermanentMethod = PermanentMethod.RYSER, bound: Optional[int] = None) -> Scalar:
    method = PermanentMethod(method)
    if method == PermanentMethod.NAIVE:
        return per_naive(A, bound)
    return per_ryser(A, bound)

"""
Exact real-root counting with Sturm sequences.

Sturm's theorem counts distinct roots, so every query first reduces to the
squarefree part p / gcd(p, p').
"""
from fractions import Fraction
from typing import List, Optional

from alphaperm.numeric.unipoly import UniPoly, poly_gcd
from alphaperm.utils.exceptions.polynomial import ZeroPolynomialError


def squarefree_part(p: UniPoly) -> UniPoly:
    if p.is_zero:
        raise ZeroPolynomialError()
    if p.degree == 0:
        return UniPoly([1])
    return (p // poly_gcd(p, p.derivative())).monic()


def sturm_sequence(p: UniPoly) -> List[UniPoly]:
    """p0 = p, p1 = p', p_{k+1} = -rem(p_{k-1}, p_k)"""
    if p.is_zero:
        raise ZeroPolynomialError()
    sequence = [p, p.derivative()]
    while not sequence[-1].is_zero:
        sequence.append(-(sequence[-2] % sequence[-1]))
    sequence.pop()
    return sequence


def _sign_changes(values: List[Fraction]) -> int:
    nonzero = [v for v in values if v != 0]
    return sum(1 for a, b in zip(nonzero, nonzero[1:]) if (a > 0) != (b > 0))


def _variations_at(sequence: List[UniPoly], point: Optional[Fraction], infinity_sign: int = 0) -> int:
    """Sign variations at a finite point, or at +oo / -oo when point is None"""
    if point is not None:
        return _sign_changes([q(point) for q in sequence])
    signs = []
    for q in sequence:
        s = 1 if q.leading > 0 else -1
        if infinity_sign < 0 and q.degree % 2 == 1:
            s = -s
        signs.append(s)
    return _sign_changes(signs)


def count_real_roots(p: UniPoly, low: Optional[Fraction] = None, high: Optional[Fraction] = None) -> int:
    """
    Number of distinct real roots in (low, high]; None means -oo / +oo.
    """
    sf = squarefree_part(p)
    if sf.degree == 0:
        return 0
    sequence = sturm_sequence(sf)
    v_low = _variations_at(sequence, low, infinity_sign=-1)
    v_high = _variations_at(sequence, high, infinity_sign=1)
    return v_low - v_high


def sturm_real_rooted(p: UniPoly) -> bool:
    """True iff every complex root of p is real"""
    if p.is_zero:
        raise ZeroPolynomialError("sturm_real_rooted is undefined for the zero polynomial")
    sf = squarefree_part(p)
    return count_real_roots(p) == sf.degree


def sturm_roots_all_negative(p: UniPoly) -> bool:
    """
    True iff every real root of p lies in (-oo, 0).

    A root at 0 counts as non-negative (boundary of the open cone).
    """
    if p.is_zero:
        raise ZeroPolynomialError("sturm_roots_all_negative is undefined for the zero polynomial")
    if p(Fraction(0)) == 0:
        return False
    return count_real_roots(p, Fraction(0), None) == 0

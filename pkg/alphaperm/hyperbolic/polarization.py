"""
Directional derivatives and polarized forms of homogeneous polynomials.

For h homogeneous of degree d the complete polarized form is

    H(v_1, ..., v_d) = (1/d!) D_{v_1} ... D_{v_d} h

and the partial polarization with k fixed vectors is the degree d-k form
((d-k)!/d!) D_{b_1} ... D_{b_k} h.
"""
from fractions import Fraction
from math import factorial
from typing import Any, Sequence

from alphaperm.numeric.scalar import Scalar, real_if_possible
from alphaperm.series.sparse_poly import SparsePoly
from alphaperm.utils.exceptions.hyperbolic import NotHomogeneousError
from alphaperm.utils.exceptions.matrix import ShapeError


def directional_derivative(h: SparsePoly, v: Sequence[Any]) -> SparsePoly:
    """D_v h = sum v_i dh/dx_i"""
    return h.directional_derivative(v)


def _homogeneous_degree(h: SparsePoly) -> int:
    if not h.is_homogeneous:
        raise NotHomogeneousError(f"degrees {sorted({e.total for e in h.terms})}")
    return max(h.degree, 0)


def _check_vectors(h: SparsePoly, vectors: Sequence[Sequence[Any]]) -> None:
    for v in vectors:
        if len(v) != h.nvars:
            raise ShapeError(f"vector of length {len(v)} for {h.nvars} variables",
                             precondition="len(v) == nvars")


def polarized_form(h: SparsePoly, vectors: Sequence[Sequence[Any]]) -> Scalar:
    """H(v_1, ..., v_d), exactly d vectors"""
    d = _homogeneous_degree(h)
    if len(vectors) != d:
        raise ShapeError(f"{len(vectors)} vectors for a form of degree {d}", precondition="exactly d vectors")
    _check_vectors(h, vectors)
    g = h
    for v in vectors:
        g = g.directional_derivative(v)
    value = g.coefficient([0] * h.nvars)
    return real_if_possible(value / factorial(d))


def partial_polarization(h: SparsePoly, fixed: Sequence[Sequence[Any]]) -> SparsePoly:
    """x -> H(b_1, ..., b_k, x, ..., x) as a homogeneous polynomial of degree d - k"""
    d = _homogeneous_degree(h)
    k = len(fixed)
    if k >= d:
        raise ShapeError(f"{k} fixed vectors for a form of degree {d}", precondition="k < d")
    _check_vectors(h, fixed)
    g = h
    for b in fixed:
        g = g.directional_derivative(b)
    return g.scale(Fraction(factorial(d - k), factorial(d)))

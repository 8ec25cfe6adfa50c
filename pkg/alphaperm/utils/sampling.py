"""
Reproducible exact sampling.

Every randomized routine derives an independent numpy stream from
(seed, *stream_keys) through ``SeedSequence``, then turns integer draws into
exact Fractions.
"""
from fractions import Fraction
from typing import Callable, List, Optional, Sequence

import numpy as np

from alphaperm.config.config import get_global_config
from alphaperm.numeric.matrix import RMatrix
from alphaperm.numeric.scalar import ComplexRational, real_if_possible
from alphaperm.utils.exceptions.sampling import SamplingError


def make_rng(seed: int, *stream: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence([int(seed), *map(int, stream)]))


def random_rational(
        rng: np.random.Generator,
        signed: bool = False,
        max_numerator: Optional[int] = None,
        max_denominator: Optional[int] = None
) -> Fraction:
    """p/q with 1 <= p <= max_numerator, 1 <= q <= max_denominator (sign random if signed)"""
    cfg = get_global_config().sampling
    p = int(rng.integers(1, (max_numerator or cfg.max_numerator) + 1))
    q = int(rng.integers(1, (max_denominator or cfg.max_denominator) + 1))
    if signed and rng.integers(0, 2):
        p = -p
    return Fraction(p, q)


def random_positive_vector(rng: np.random.Generator, n: int, **kwargs) -> List[Fraction]:
    return [random_rational(rng, **kwargs) for _ in range(n)]


def random_vector(rng: np.random.Generator, n: int, **kwargs) -> List[Fraction]:
    return [random_rational(rng, signed=True, **kwargs) for _ in range(n)]


def random_small_vector(rng: np.random.Generator, n: int, bound: int = 5) -> List[Fraction]:
    """Integers in [-bound, bound], keeping Gram entries and dilated products small"""
    return [Fraction(int(v)) for v in rng.integers(-bound, bound + 1, size=n)]


def random_psd_matrix(rng: np.random.Generator, n: int, rank: Optional[int] = None, bound: int = 5) -> RMatrix:
    """Gram matrix V^T V for a random integer V of shape rank x n"""
    rank = n if rank is None else rank
    V = RMatrix([random_small_vector(rng, n, bound) for _ in range(rank)]) if rank else RMatrix.zeros(1, n)
    G = V.transpose() @ V
    return RMatrix(G.entries, symmetric=True)


def sample_in_cone(
        rng: np.random.Generator,
        center: Sequence[Fraction],
        member: Callable[[List[Fraction]], bool],
        retry_budget: Optional[int] = None
) -> List[Fraction]:
    """
    Rejection sampling from the box center + [-r, r]^n, r = max |center_i|,
    keeping the first point ``member`` accepts.
    """
    budget = get_global_config().sampling.retry_budget if retry_budget is None else retry_budget
    radius = max((abs(Fraction(c)) for c in center), default=Fraction(1)) or Fraction(1)
    steps = get_global_config().sampling.max_denominator
    for _ in range(budget):
        offset = rng.integers(-steps, steps + 1, size=len(center))
        point = [Fraction(c) + radius * Fraction(int(o), steps) for c, o in zip(center, offset)]
        if member(point):
            return point
    raise SamplingError("no cone point found around the center", attempts=budget)


def random_hermitian_psd_matrix(rng: np.random.Generator, n: int, rank: Optional[int] = None,
                                bound: int = 3) -> RMatrix:
    """V^* V for a random Gaussian-integer V of shape rank x n"""
    rank = n if rank is None else rank
    if not rank:
        return RMatrix(RMatrix.zeros(n, n).entries, hermitian=True)
    V = RMatrix([[ComplexRational(re, im) for re, im in zip(random_small_vector(rng, n, bound),
                                                           random_small_vector(rng, n, bound))]
                 for _ in range(rank)])
    G = V.conj_transpose() @ V
    return RMatrix([[real_if_possible(c) for c in row] for row in G.entries], hermitian=True)

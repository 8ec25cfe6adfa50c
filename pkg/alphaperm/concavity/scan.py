from fractions import Fraction
from typing import Callable, List, Optional, Sequence

import numpy as np

from alphaperm.concavity.quotient import QuotientSpec, evaluate_quotient
from alphaperm.config.model import ConcavityReport
from alphaperm.enums.quotient_e import QuotientMode
from alphaperm.hyperbolic.instance import cone_member
from alphaperm.numeric.scalar import Scalar
from alphaperm.utils.logger import Logger
from alphaperm.utils.sampling import make_rng, random_positive_vector, sample_in_cone

logger = Logger.get_logger("concavity")

Objective = Callable[[Sequence[Fraction]], Scalar]


def sample_domain_point(spec: QuotientSpec, rng: np.random.Generator) -> List[Fraction]:
    """A random rational point of the quotient's open cone"""
    if spec.mode == QuotientMode.BAPAT:
        return random_positive_vector(rng, spec.nvars)
    return sample_in_cone(rng, spec.e, lambda p: cone_member(spec.instance, p))


def midpoint_concavity_scan(
        spec: QuotientSpec,
        samples: int,
        seed: int = 0,
        objective: Optional[Objective] = None
) -> ConcavityReport:
    """
    Exact check of f((x+y)/2) >= (f(x) + f(y))/2 on random pairs from the cone.

    ``objective`` replaces the quotient (negative controls).
    """
    f = objective or (lambda x: evaluate_quotient(spec, x))
    rng = make_rng(seed)
    report = ConcavityReport(mode=spec.mode, seed=seed)
    with logger.timed("midpoint_concavity_scan", mode=spec.mode.value, samples=samples, seed=seed):
        for trial in range(samples):
            x = sample_domain_point(spec, rng)
            y = sample_domain_point(spec, rng)
            mid = [(a + b) / 2 for a, b in zip(x, y)]
            margin = f(mid) - (f(x) + f(y)) / 2
            report.trials += 1
            if report.worst_margin is None or margin < report.worst_margin:
                report.worst_margin = margin
            if margin < 0:
                logger.debug("midpoint concavity violated", context={"trial": trial, "margin": margin})
                report.record({"x": x, "y": y, "margin": margin})
    return report

"""
Float corroboration of concavity: the largest eigenvalue of a central
difference Hessian at sampled interior points.

The objective is evaluated exactly at the (exactly representable) float
stencil points and the four-point differences are formed in rationals, so
the only rounding is the final conversion.
"""
from fractions import Fraction
from typing import Optional

import numpy as np

from alphaperm.concavity.quotient import QuotientSpec, evaluate_quotient
from alphaperm.concavity.scan import Objective, sample_domain_point
from alphaperm.config.config import get_global_config
from alphaperm.config.model import HessianReport
from alphaperm.numeric.scalar import to_float
from alphaperm.utils.logger import Logger
from alphaperm.utils.sampling import make_rng

logger = Logger.get_logger("concavity")


def _hessian(f: Objective, z: np.ndarray, step: float) -> np.ndarray:
    n = len(z)
    h = step * np.maximum(np.abs(z), 1.0)
    exact_z = [Fraction(float(v)) for v in z]
    exact_h = [Fraction(float(v)) for v in h]

    def at(shifts) -> Fraction:
        point = list(exact_z)
        for i, s in shifts:
            point[i] = point[i] + s * exact_h[i]
        return f(point)

    H = np.zeros((n, n))
    for i in range(n):
        for j in range(i, n):
            if i == j:
                value = (at([(i, 2)]) - 2 * at([]) + at([(i, -2)])) / (4 * exact_h[i] ** 2)
            else:
                value = (at([(i, 1), (j, 1)]) - at([(i, 1), (j, -1)])
                         - at([(i, -1), (j, 1)]) + at([(i, -1), (j, -1)])) / (4 * exact_h[i] * exact_h[j])
            H[i, j] = H[j, i] = to_float(value)
    return H


def hessian_nsd_check(
        spec: QuotientSpec,
        points: Optional[int] = None,
        tol: Optional[float] = None,
        seed: int = 0,
        step: Optional[float] = None,
        objective: Optional[Objective] = None
) -> HessianReport:
    """
    At ``points`` sampled cone points, flag any Hessian whose largest
    eigenvalue exceeds tol * max(1, max |H_ij|).
    """
    cfg = get_global_config().hessian
    points = cfg.points if points is None else points
    tol = cfg.tol if tol is None else tol
    step = cfg.step if step is None else step
    f = objective or (lambda x: evaluate_quotient(spec, x))
    rng = make_rng(seed)
    report = HessianReport(mode=spec.mode, max_eigenvalue=float("-inf"), tol=tol, points=points, seed=seed)
    with logger.timed("hessian_nsd_check", points=points, seed=seed):
        for _ in range(points):
            z = np.array([float(c) for c in sample_domain_point(spec, rng)])
            H = _hessian(f, z, step)
            top = float(np.linalg.eigvalsh(H).max())
            scale = max(1.0, float(np.abs(H).max()))
            report.trials += 1
            report.max_eigenvalue = max(report.max_eigenvalue, top)
            if top > tol * scale:
                report.record({"point": [float(v) for v in z], "max_eigenvalue": top})
    return report

from typing import Any, Optional, Sequence

from alphaperm.config.config import get_global_config
from alphaperm.config.model import GardingReport
from alphaperm.hyperbolic.instance import HyperbolicInstance, certify_hyperbolic, cone_member
from alphaperm.series.sparse_poly import SparsePoly
from alphaperm.utils.exceptions.hyperbolic import ConeMembershipError, HyperbolicError, NotHyperbolicError
from alphaperm.utils.logger import Logger
from alphaperm.utils.sampling import make_rng, sample_in_cone

logger = Logger.get_logger("hyperbolic")


def garding_lemma_test(
        inst: HyperbolicInstance,
        v: Sequence[Any],
        trials: Optional[int] = None,
        seed: int = 0,
        points: int = 100,
        derivative: Optional[SparsePoly] = None
) -> GardingReport:
    """
    For v in the cone of h: certify D_v h hyperbolic with respect to e, then
    check that sampled cone points of h lie in the cone of D_v h.

    ``derivative`` replaces D_v h (negative controls).
    """
    if not cone_member(inst, v):
        raise ConeMembershipError(f"v = {[str(c) for c in v]}")
    g = inst.h.directional_derivative(v) if derivative is None else derivative
    trials = get_global_config().hyperbolic.trials if trials is None else trials
    report = GardingReport(derivative=g.to_dict(), seed=seed)

    try:
        derived = certify_hyperbolic(g, inst.e, trials=trials, seed=seed)
    except NotHyperbolicError as e:
        report.record({"stage": "certify", "counterexample": e.counterexample})
        return report
    except HyperbolicError as e:
        report.record({"stage": "certify", "error": e.message})
        return report
    report.certificate = derived.cert
    report.certified = True

    rng = make_rng(seed, 1)
    with logger.timed("garding_lemma_test", points=points, seed=seed):
        for _ in range(points):
            x = sample_in_cone(rng, inst.e, lambda p: cone_member(inst, p))
            report.trials += 1
            report.points += 1
            if not cone_member(derived, x):
                report.record({"stage": "containment", "x": x})
    return report

from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence

from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from alphaperm.config.config import get_global_config
from alphaperm.config.model import Certificate
from alphaperm.numeric.scalar import parse_rational
from alphaperm.numeric.sturm import sturm_real_rooted, sturm_roots_all_negative
from alphaperm.series.sparse_poly import SparsePoly
from alphaperm.utils.exceptions.hyperbolic import (
    HyperbolicError,
    NotHomogeneousError,
    NotHyperbolicError,
    UncertifiedInstanceError,
)
from alphaperm.utils.exceptions.matrix import ShapeError
from alphaperm.utils.logger import Logger
from alphaperm.utils.sampling import make_rng, random_vector

logger = Logger.get_logger("hyperbolic")


class HyperbolicInstance(BaseModel):
    """A homogeneous h, a direction e with h(e) != 0, and (once certified) its certificate"""
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    h: SparsePoly
    e: List[Fraction]
    cert: Optional[Certificate] = None

    @field_validator('e', mode='before')
    @classmethod
    def parse_direction(cls, v):
        return [parse_rational(c) for c in v]

    @model_validator(mode='after')
    def check_form(self):
        if len(self.e) != self.h.nvars:
            raise ShapeError(f"direction of length {len(self.e)} for {self.h.nvars} variables",
                             precondition="len(e) == nvars")
        if not self.h.is_homogeneous:
            raise NotHomogeneousError(f"degrees {sorted({x.total for x in self.h.terms})}")
        if self.h.evaluate(self.e) == 0:
            raise HyperbolicError("h(e) = 0", precondition="h(e) != 0")
        return self

    @property
    def degree(self) -> int:
        return self.h.degree

    @property
    def certified(self) -> bool:
        return self.cert is not None and self.cert.complete

    def line(self, x: Sequence[Any]):
        """t -> h(x + t e)"""
        return self.h.restrict_to_line(x, self.e)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "h": self.h.to_dict(),
            "e": [str(c) for c in self.e],
            "degree": self.degree,
            "cert": self.cert.to_dict() if self.cert else None,
        }


def certify_hyperbolic(
        h: SparsePoly,
        e: Sequence[Any],
        trials: Optional[int] = None,
        seed: int = 0,
        coordinate_checks: Optional[bool] = None
) -> HyperbolicInstance:
    """
    Check real-rootedness of t -> h(x + te) exactly on sampled lines.

    The coordinate vectors are checked first (when enabled), then ``trials``
    random rational points. The first line that is not real-rooted raises
    NotHyperbolicError carrying x.
    """
    cfg = get_global_config().hyperbolic
    trials = cfg.trials if trials is None else trials
    check_coordinates = cfg.coordinate_checks if coordinate_checks is None else coordinate_checks
    instance = HyperbolicInstance(h=h, e=list(e))

    points: List[List[Fraction]] = []
    if check_coordinates:
        points.extend([Fraction(int(i == j)) for j in range(h.nvars)] for i in range(h.nvars))
    rng = make_rng(seed)
    passed = 0
    for index in range(len(points) + trials):
        x = points[index] if index < len(points) else random_vector(rng, h.nvars)
        if not sturm_real_rooted(instance.line(x)):
            logger.debug("line not real-rooted", context={"x": [str(c) for c in x], "seed": seed})
            raise NotHyperbolicError(f"h(x + te) has non-real roots at x = {[str(c) for c in x]}",
                                     counterexample=x, seed=seed)
        passed += 1

    cert = Certificate(trials=trials, seed=seed, passed=passed, coordinate_checks=len(points))
    logger.info("hyperbolicity certified", context=cert.to_dict())
    return instance.model_copy(update={"cert": cert})


def cone_member(inst: HyperbolicInstance, x: Sequence[Any]) -> bool:
    """
    x in the open cone: every root of h(x + te) is negative, i.e. every
    hyperbolic eigenvalue of x is positive. Boundary points are non-members.
    """
    if not inst.certified:
        raise UncertifiedInstanceError()
    if len(x) != inst.h.nvars:
        raise ShapeError(f"point of length {len(x)} for {inst.h.nvars} variables",
                         precondition="len(x) == nvars")
    return sturm_roots_all_negative(inst.line(x))

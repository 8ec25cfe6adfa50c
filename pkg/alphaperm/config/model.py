from fractions import Fraction
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field

from alphaperm.core.base_report import BaseReport, to_jsonable
from alphaperm.enums.field_e import ScalarField
from alphaperm.enums.quotient_e import QuotientMode


class Certificate(BaseModel):
    """Record of a sampled hyperbolicity certification"""
    model_config = ConfigDict(frozen=True)

    trials: int = Field(ge=0)
    seed: int
    passed: int = Field(ge=0)
    coordinate_checks: int = Field(ge=0, default=0)

    @property
    def complete(self) -> bool:
        return self.passed == self.trials + self.coordinate_checks

    def to_dict(self) -> Dict[str, Any]:
        return {"trials": self.trials, "seed": self.seed, "passed": self.passed,
                "coordinate_checks": self.coordinate_checks}


class MacMahonReport(BaseReport):
    """Coefficientwise check of a master-theorem expansion against direct enumeration"""
    model_config = ConfigDict(arbitrary_types_allowed=True)

    identity: str
    alpha: Fraction
    degree: int

    @property
    def checked(self) -> int:
        return self.trials

    @property
    def mismatches(self) -> int:
        return self.violations

    def to_dict(self) -> Dict[str, Any]:
        data = super().to_dict()
        data.update(checked=self.checked, mismatches=self.mismatches)
        return data


class GardingReport(BaseReport):
    """Derivative hyperbolicity plus cone containment on sampled points"""
    model_config = ConfigDict(arbitrary_types_allowed=True)

    derivative: Dict[str, Any]
    certificate: Optional[Certificate] = None
    certified: bool = False
    points: int = 0


class ConcavityReport(BaseReport):
    """Exact midpoint-concavity scan; worst_margin is the smallest f(mid) - mean seen"""
    model_config = ConfigDict(arbitrary_types_allowed=True)

    mode: QuotientMode
    worst_margin: Optional[Fraction] = None


class HessianReport(BaseReport):
    """Float diagnostic: largest Hessian eigenvalue over sampled points"""
    mode: QuotientMode
    max_eigenvalue: float
    tol: float
    points: int


class NonnegativityReport(BaseReport):
    model_config = ConfigDict(arbitrary_types_allowed=True)

    alpha: Fraction
    field: ScalarField
    min_value: Optional[Fraction] = None


class WitnessExhaustion(BaseModel):
    """No negative coefficient within the degree and concentrated-index budgets for any tried weight vector"""
    model_config = ConfigDict(arbitrary_types_allowed=True)

    alpha: Fraction
    field: ScalarField
    m: int
    frame_size: int
    max_degree: int
    max_multiple: int = 0
    attempts: int
    weights: List[List[Fraction]] = Field(default_factory=list)
    seed: Optional[int] = None

    def to_dict(self) -> Dict[str, Any]:
        data = to_jsonable(self)
        data["exhausted"] = True
        return data

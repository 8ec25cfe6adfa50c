from enum import Enum
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field

from alphaperm.numeric.matrix import RMatrix
from alphaperm.numeric.scalar import ComplexRational, format_scalar


def to_jsonable(value: Any) -> Any:
    """
    Render exact values for JSON output: rationals become "p/q" strings
    (counts stay ints), matrices use the shared matrix object format.
    """
    if isinstance(value, BaseModel):
        return to_jsonable({name: getattr(value, name) for name in type(value).model_fields})
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, (int, float)):
        return value
    if isinstance(value, (Fraction, ComplexRational)):
        return format_scalar(value)
    if isinstance(value, RMatrix):
        return value.to_dict()
    if isinstance(value, Path):
        return str(value)
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    if hasattr(value, "to_dict"):
        return value.to_dict()
    return str(value)


class BaseReport(BaseModel):
    """Common shape of every randomized scan report"""
    model_config = ConfigDict(arbitrary_types_allowed=True, use_enum_values=False)

    trials: int = Field(ge=0, default=0)
    violations: int = Field(ge=0, default=0)
    seed: Optional[int] = None
    witnesses: List[Dict[str, Any]] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.violations == 0

    def record(self, witness: Dict[str, Any], limit: int = 10) -> None:
        """Count a violation, keeping the first few witnesses"""
        self.violations += 1
        if len(self.witnesses) < limit:
            self.witnesses.append(witness)

    def to_dict(self) -> Dict[str, Any]:
        return to_jsonable(self)

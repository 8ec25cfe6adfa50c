from pathlib import Path
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator


class EnumerationConfig(BaseModel):
    """Size limits for factorial / exponential enumerations"""
    naive_bound: int = Field(ge=1, default=10)
    ryser_bound: int = Field(ge=1, default=20)
    minor_bound: int = Field(ge=1, default=12)


class SeriesConfig(BaseModel):
    max_degree: int = Field(ge=0, default=6)


class HyperbolicConfig(BaseModel):
    trials: int = Field(ge=1, default=200)
    coordinate_checks: bool = True


class SamplingConfig(BaseModel):
    """Random rational sampling: p/q with 1 <= p <= max_numerator, 1 <= q <= max_denominator"""
    max_numerator: int = Field(ge=1, default=100)
    max_denominator: int = Field(ge=1, default=100)
    retry_budget: int = Field(ge=1, default=1000)


class HessianConfig(BaseModel):
    step: float = Field(gt=0.0, default=1e-4)
    tol: float = Field(gt=0.0, default=1e-6)
    points: int = Field(ge=1, default=20)


class WitnessConfig(BaseModel):
    max_degree: int = Field(ge=1, default=12)
    retries: int = Field(ge=0, default=20)
    verify_bound: int = Field(ge=1, default=10)
    max_multiple: int = Field(ge=0, default=8)
    box_limit: int = Field(ge=1, default=50000)


class LogConfig(BaseModel):
    """Logging configuration"""
    model_config = ConfigDict(arbitrary_types_allowed=True)

    json_format: bool = True
    log_dir: Optional[Path] = None
    log_level: str = Field(default="WARNING", pattern="^(DEBUG|INFO|WARNING|ERROR|CRITICAL)$")
    backup_count: int = Field(ge=0, default=7)

    @field_validator('log_level', mode='before')
    @classmethod
    def upper_level(cls, v):
        return v.upper() if isinstance(v, str) else v


class RunConfig(BaseModel):
    """Per-invocation settings of a randomized command"""
    seed: int = Field(ge=0, default=0)
    degree: Optional[int] = Field(ge=0, default=None)
    trials: Optional[int] = Field(ge=1, default=None)
    samples: Optional[int] = Field(ge=1, default=None)
    tol: Optional[float] = Field(gt=0.0, default=None)
    input_path: Optional[Path] = None
    output_path: Optional[Path] = None

    @model_validator(mode='after')
    def check_paths(self):
        if self.input_path is not None and self.output_path is not None and self.input_path == self.output_path:
            raise ValueError("input and output paths must differ")
        return self

from alphaperm.core.base_config import (
    EnumerationConfig,
    SeriesConfig,
    HyperbolicConfig,
    SamplingConfig,
    HessianConfig,
    WitnessConfig,
    LogConfig,
    RunConfig,
)
from alphaperm.core.base_report import BaseReport

__all__ = [
    'EnumerationConfig',
    'SeriesConfig',
    'HyperbolicConfig',
    'SamplingConfig',
    'HessianConfig',
    'WitnessConfig',
    'LogConfig',
    'RunConfig',
    'BaseReport',
]

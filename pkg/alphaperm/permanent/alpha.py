from fractions import Fraction
from typing import Optional

from pydantic import BaseModel, ConfigDict, field_validator

from alphaperm.numeric.scalar import parse_rational


def _natural_form(value: Fraction, numerator: int) -> Optional[int]:
    """m >= 0 with value == numerator / (m + 1), if any"""
    if value == 0 or (value > 0) != (numerator > 0):
        return None
    denom = Fraction(numerator) / value
    if denom.denominator != 1 or denom.numerator < 1:
        return None
    return denom.numerator - 1


class Alpha(BaseModel):
    """An exact real parameter alpha (and its reciprocal beta = 1/alpha)"""
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    value: Fraction

    @field_validator('value', mode='before')
    @classmethod
    def parse_value(cls, v):
        return parse_rational(v)

    @classmethod
    def of(cls, value) -> 'Alpha':
        return value if isinstance(value, Alpha) else cls(value=value)

    @property
    def beta(self) -> Fraction:
        if self.value == 0:
            raise ZeroDivisionError("alpha = 0 has no reciprocal")
        return 1 / self.value

    @property
    def sign(self) -> int:
        return (self.value > 0) - (self.value < 0)

    def neg_reciprocal(self) -> Optional[int]:
        """m with alpha = -1/(m+1)"""
        return _natural_form(self.value, -1)

    def pos_reciprocal(self) -> Optional[int]:
        """m with alpha = 1/(m+1)"""
        return _natural_form(self.value, 1)

    def two_over(self) -> Optional[int]:
        """m with alpha = 2/(m+1)"""
        return _natural_form(self.value, 2)

    def __str__(self):
        return str(self.value)

from alphaperm.utils.exceptions.base import AlphaPermException, handle_errors
from alphaperm.utils.exceptions.codec import ParseError
from alphaperm.utils.exceptions.config import ConfigError, InvalidConfigError
from alphaperm.utils.exceptions.enumeration import BoundExceededError
from alphaperm.utils.exceptions.hyperbolic import (
    HyperbolicError,
    NotHomogeneousError,
    NotHyperbolicError,
    ConeMembershipError,
    UncertifiedInstanceError,
)
from alphaperm.utils.exceptions.matrix import MatrixError, ShapeError, StructureError, SingularMatrixError
from alphaperm.utils.exceptions.polynomial import PolynomialError, ZeroPolynomialError
from alphaperm.utils.exceptions.sampling import SamplingError
from alphaperm.utils.exceptions.series import SeriesError, ConstantTermError, DegenerateAlphaError
from alphaperm.utils.exceptions.witness import WitnessError, MemberAlphaError, UnsupportedAlphaError, FrameError

__all__ = [
    'AlphaPermException',
    'handle_errors',
    'ParseError',
    'ConfigError',
    'InvalidConfigError',
    'BoundExceededError',
    'HyperbolicError',
    'NotHomogeneousError',
    'NotHyperbolicError',
    'ConeMembershipError',
    'UncertifiedInstanceError',
    'MatrixError',
    'ShapeError',
    'StructureError',
    'SingularMatrixError',
    'PolynomialError',
    'ZeroPolynomialError',
    'SamplingError',
    'SeriesError',
    'ConstantTermError',
    'DegenerateAlphaError',
    'WitnessError',
    'MemberAlphaError',
    'UnsupportedAlphaError',
    'FrameError',
]

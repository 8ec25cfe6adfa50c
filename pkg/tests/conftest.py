from fractions import Fraction
from pathlib import Path

import pytest

from alphaperm.config.config import Config, default_settings, set_global_config
from alphaperm.hyperbolic.instance import certify_hyperbolic
from alphaperm.numeric.matrix import RMatrix
from alphaperm.series.sparse_poly import lorentz_polynomial

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(autouse=True)
def default_config():
    """Every test starts from the bundled defaults"""
    config = Config.from_dict(default_settings())
    set_global_config(config)
    yield config
    set_global_config(Config.from_dict(default_settings()))


@pytest.fixture
def ones3():
    """3 x 3 all-ones matrix"""
    return RMatrix([[1] * 3 for _ in range(3)], symmetric=True)


@pytest.fixture
def small_matrix():
    """Non-symmetric rational 3 x 3 matrix"""
    return RMatrix([[1, Fraction(1, 2), 0], [2, -1, 3], [Fraction(-1, 3), 1, 2]])


@pytest.fixture
def psd_gram():
    """The 3 x 3 Gram matrix of the frame {e1, e2, e1 + e2} with unit weights"""
    third = Fraction(1, 3)
    return RMatrix([[2 * third, -third, third], [-third, 2 * third, third], [third, third, 2 * third]],
                   symmetric=True)


@pytest.fixture
def lorentz3():
    """x1^2 - x2^2 - x3^2 certified with respect to e = (1, 0, 0)"""
    return certify_hyperbolic(lorentz_polynomial(3), [1, 0, 0], trials=30, seed=0)


@pytest.fixture
def fixtures_dir():
    return FIXTURES

from enum import Enum

class ScalarField(str, Enum):
    """Scalar field of the matrices under study"""
    REAL = "real"
    COMPLEX = "complex"

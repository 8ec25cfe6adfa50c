from enum import Enum

class QuotientMode(str, Enum):
    BAPAT = "bapat"
    HYPERBOLIC = "hyperbolic"
    MIXED_DISCRIMINANT = "mixed-discriminant"

from enum import Enum

class MembershipReason(str, Enum):
    """Which branch of the nonnegativity classification an alpha falls in"""
    ZERO = "zero"
    NEG_RECIPROCAL = "neg-reciprocal"
    TWO_OVER = "two-over"
    POS_RECIPROCAL = "pos-reciprocal"
    NON_MEMBER = "non-member"

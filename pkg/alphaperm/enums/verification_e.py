from enum import Enum

class VerificationStatus(str, Enum):
    """How a witness value was confirmed"""
    BOTH = "both"
    SERIES_ONLY = "series-only"

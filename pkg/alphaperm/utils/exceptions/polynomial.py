from alphaperm.utils.exceptions.base import AlphaPermException


class PolynomialError(AlphaPermException):
    def __init__(self, message: str, precondition: str = None, **details):
        if precondition:
            details['precondition'] = precondition
        super().__init__(message, details)


class ZeroPolynomialError(PolynomialError):
    def __init__(self, message: str = "operation undefined for the zero polynomial", **details):
        super().__init__(message, "nonzero polynomial", **details)

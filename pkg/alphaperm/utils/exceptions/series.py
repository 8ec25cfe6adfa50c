from alphaperm.utils.exceptions.base import AlphaPermException


class SeriesError(AlphaPermException):
    def __init__(self, message: str, precondition: str = None, **details):
        if precondition:
            details['precondition'] = precondition
        super().__init__(message, details)


class ConstantTermError(SeriesError):
    def __init__(self, message: str, expected: str = None, **details):
        if expected is not None:
            details['expected'] = expected
        super().__init__(f"Wrong constant term: {message}", "constant term", **details)


class DegenerateAlphaError(SeriesError):
    def __init__(self, message: str, **details):
        super().__init__(f"Degenerate alpha: {message}", "alpha != 0", **details)

from alphaperm.utils.exceptions.base import AlphaPermException


class WitnessError(AlphaPermException):
    def __init__(self, message: str, alpha=None, precondition: str = None, **details):
        if alpha is not None:
            details['alpha'] = str(alpha)
        if precondition:
            details['precondition'] = precondition
        super().__init__(message, details)


class MemberAlphaError(WitnessError):
    def __init__(self, message: str, alpha=None, **details):
        super().__init__(f"Alpha is a member, nothing to find: {message}", alpha, "non-member alpha", **details)


class UnsupportedAlphaError(WitnessError):
    def __init__(self, message: str, alpha=None, **details):
        super().__init__(f"Alpha outside construction range: {message}", alpha, "alpha > 0", **details)


class FrameError(WitnessError):
    def __init__(self, message: str, **details):
        super().__init__(f"Frame construction failed: {message}", None, "spanning frame", **details)

from alphaperm.utils.exceptions.base import AlphaPermException


class HyperbolicError(AlphaPermException):
    def __init__(self, message: str, precondition: str = None, **details):
        if precondition:
            details['precondition'] = precondition
        super().__init__(message, details)


class NotHomogeneousError(HyperbolicError):
    def __init__(self, message: str, **details):
        super().__init__(f"Polynomial is not homogeneous: {message}", "homogeneous", **details)


class NotHyperbolicError(HyperbolicError):
    """A sampled line x + te on which h is not real-rooted."""

    def __init__(self, message: str, counterexample=None, **details):
        self.counterexample = counterexample
        if counterexample is not None:
            details['counterexample'] = [str(c) for c in counterexample]
        super().__init__(f"Not hyperbolic: {message}", "hyperbolic", **details)


class ConeMembershipError(HyperbolicError):
    def __init__(self, message: str, **details):
        super().__init__(f"Point outside hyperbolicity cone: {message}", "cone member", **details)


class UncertifiedInstanceError(HyperbolicError):
    def __init__(self, message: str = "instance has no passing certificate", **details):
        super().__init__(message, "certified instance", **details)

from alphaperm.utils.exceptions.base import AlphaPermException


class SamplingError(AlphaPermException):
    def __init__(self, message: str, attempts: int = None, **details):
        if attempts is not None:
            details['attempts'] = attempts
        details.setdefault('precondition', 'cone sampling within retry budget')
        super().__init__(f"Sampling failed: {message}", details)

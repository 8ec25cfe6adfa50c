from alphaperm.utils.exceptions.base import AlphaPermException


class ParseError(AlphaPermException):
    def __init__(self, message: str, value=None, **details):
        if value is not None:
            details['value'] = repr(value)
        details.setdefault('precondition', 'well-formed input')
        super().__init__(f"Parse error: {message}", details)

from alphaperm.utils.exceptions.base import AlphaPermException


class BoundExceededError(AlphaPermException):
    def __init__(self, message: str, size: int = None, bound: int = None, **details):
        if size is not None:
            details['size'] = size
        if bound is not None:
            details['bound'] = bound
        details.setdefault('precondition', 'size within enumeration bound')
        super().__init__(f"Enumeration bound exceeded: {message}", details)

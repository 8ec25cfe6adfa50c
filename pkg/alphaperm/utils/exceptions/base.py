import functools
import logging
from typing import Any, Dict, Optional


class AlphaPermException(Exception):
    """Base exception for alphaperm."""

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        self.message = message
        self.details = details or {}
        super().__init__(self.message)
        logging.getLogger("alphaperm.errors").debug(
            "%s: %s", self.__class__.__name__, self.message, extra={"context": self.details}
        )

    @property
    def precondition(self) -> Optional[str]:
        return self.details.get("precondition")

    def to_dict(self) -> Dict[str, Any]:
        return {
            "error": self.__class__.__name__,
            "message": self.message,
            "details": {k: str(v) for k, v in self.details.items()},
        }


def handle_errors(func):
    """Catch and convert errors to alphaperm exceptions."""
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except AlphaPermException:
            raise
        except (ValueError, TypeError, ZeroDivisionError, KeyError) as e:
            raise AlphaPermException(f"Error in {func.__name__}: {str(e)}", {"cause": type(e).__name__})
    return wrapper

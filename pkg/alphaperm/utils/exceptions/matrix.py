from alphaperm.utils.exceptions.base import AlphaPermException


class MatrixError(AlphaPermException):
    def __init__(self, message: str, precondition: str = None, **details):
        if precondition:
            details['precondition'] = precondition
        super().__init__(message, details)


class ShapeError(MatrixError):
    def __init__(self, message: str, precondition: str = "shape", **details):
        super().__init__(f"Shape mismatch: {message}", precondition, **details)


class StructureError(MatrixError):
    def __init__(self, message: str, precondition: str = "structure", **details):
        super().__init__(f"Structure violated: {message}", precondition, **details)


class SingularMatrixError(MatrixError):
    def __init__(self, message: str, precondition: str = "nonsingular", **details):
        super().__init__(f"Singular matrix: {message}", precondition, **details)

from fractions import Fraction
from typing import Any, Dict, Iterable, List, Sequence, Tuple

from alphaperm.numeric.scalar import (
    ComplexRational,
    Scalar,
    conjugate,
    encode_scalar,
    parse_scalar,
)
from alphaperm.utils.exceptions.codec import ParseError
from alphaperm.utils.exceptions.matrix import ShapeError, StructureError


class RMatrix:
    """
    Dense immutable matrix of exact scalars.

    The ``symmetric`` / ``hermitian`` flags are assertions checked entrywise
    at construction time.
    """

    __slots__ = ("rows", "cols", "entries", "symmetric", "hermitian")

    def __init__(
            self,
            rows: Sequence[Sequence[Any]],
            symmetric: bool = False,
            hermitian: bool = False
    ):
        data = tuple(tuple(parse_scalar(v) for v in row) for row in rows)
        ncols = len(data[0]) if data else 0
        if any(len(row) != ncols for row in data):
            raise ShapeError("rows have different lengths", precondition="rectangular entries")
        self.rows = len(data)
        self.cols = ncols
        self.entries = data
        self.symmetric = symmetric
        self.hermitian = hermitian
        if symmetric and not self._check_symmetric():
            raise StructureError("matrix flagged symmetric is not equal to its transpose")
        if hermitian and not self._check_hermitian():
            raise StructureError("matrix flagged hermitian is not equal to its conjugate transpose")

    # construction helpers

    @classmethod
    def identity(cls, n: int) -> 'RMatrix':
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], symmetric=True)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> 'RMatrix':
        return cls([[0] * cols for _ in range(rows)], symmetric=rows == cols)

    @classmethod
    def diagonal(cls, values: Sequence[Any]) -> 'RMatrix':
        n = len(values)
        return cls([[values[i] if i == j else 0 for j in range(n)] for i in range(n)], symmetric=True)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[Any]]) -> 'RMatrix':
        if not columns:
            raise ShapeError("no columns given")
        n = len(columns[0])
        if any(len(c) != n for c in columns):
            raise ShapeError("columns have different lengths")
        return cls([[columns[j][i] for j in range(len(columns))] for i in range(n)])

    @classmethod
    def column(cls, values: Sequence[Any]) -> 'RMatrix':
        return cls([[v] for v in values])

    @classmethod
    def row(cls, values: Sequence[Any]) -> 'RMatrix':
        return cls([list(values)])

    # structure

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    @property
    def is_complex(self) -> bool:
        return any(isinstance(v, ComplexRational) for row in self.entries for v in row)

    def _check_symmetric(self) -> bool:
        return self.is_square and all(
            self.entries[i][j] == self.entries[j][i]
            for i in range(self.rows) for j in range(i + 1, self.cols)
        )

    def _check_hermitian(self) -> bool:
        if not self.is_square:
            return False
        for i in range(self.rows):
            if conjugate(self.entries[i][i]) != self.entries[i][i]:
                return False
            for j in range(i + 1, self.cols):
                if self.entries[i][j] != conjugate(self.entries[j][i]):
                    return False
        return True

    def detect_structure(self) -> 'RMatrix':
        """Copy with every structural flag the entries satisfy"""
        return RMatrix(self.entries, symmetric=self._check_symmetric(), hermitian=self._check_hermitian())

    @property
    def is_self_adjoint(self) -> bool:
        """symmetric real or hermitian flag set"""
        return self.hermitian or (self.symmetric and not self.is_complex)

    # access

    def __getitem__(self, index: Tuple[int, int]) -> Scalar:
        i, j = index
        return self.entries[i][j]

    def __eq__(self, other):
        if not isinstance(other, RMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return f"RMatrix({[[str(v) for v in row] for row in self.entries]})"

    def diagonal_entries(self) -> List[Scalar]:
        return [self.entries[i][i] for i in range(min(self.rows, self.cols))]

    def column_vectors(self) -> List[List[Scalar]]:
        return [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)]

    # algebra

    def transpose(self) -> 'RMatrix':
        return RMatrix([[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)],
                       symmetric=self.symmetric)

    def conj_transpose(self) -> 'RMatrix':
        return RMatrix([[conjugate(self.entries[i][j]) for i in range(self.rows)] for j in range(self.cols)],
                       hermitian=self.hermitian)

    def __add__(self, other: 'RMatrix') -> 'RMatrix':
        if self.shape != other.shape:
            raise ShapeError(f"cannot add {self.shape} and {other.shape}")
        return RMatrix(
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)],
            symmetric=self.symmetric and other.symmetric,
            hermitian=self.hermitian and other.hermitian,
        )

    def __sub__(self, other: 'RMatrix') -> 'RMatrix':
        if self.shape != other.shape:
            raise ShapeError(f"cannot subtract {other.shape} from {self.shape}")
        return RMatrix(
            [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)],
            symmetric=self.symmetric and other.symmetric,
            hermitian=self.hermitian and other.hermitian,
        )

    def __matmul__(self, other: 'RMatrix') -> 'RMatrix':
        if self.cols != other.rows:
            raise ShapeError(f"cannot multiply {self.shape} by {other.shape}")
        other_cols = other.column_vectors()
        return RMatrix([
            [sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in other_cols]
            for row in self.entries
        ])

    def scale(self, factor) -> 'RMatrix':
        factor = parse_scalar(factor)
        real_factor = not isinstance(factor, ComplexRational)
        return RMatrix([[factor * v for v in row] for row in self.entries],
                       symmetric=self.symmetric,
                       hermitian=self.hermitian and real_factor)

    def principal_submatrix(self, indices: Iterable[int]) -> 'RMatrix':
        idx = list(indices)
        return RMatrix([[self.entries[i][j] for j in idx] for i in idx],
                       symmetric=self.symmetric, hermitian=self.hermitian)

    def trace(self) -> Scalar:
        return sum(self.diagonal_entries(), Fraction(0))

    # codec

    def to_dict(self) -> Dict[str, Any]:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "entries": [[encode_scalar(v) for v in row] for row in self.entries],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any], symmetric: bool = False, hermitian: bool = False) -> 'RMatrix':
        """Parse the shared matrix JSON object {"rows", "cols", "entries"}"""
        if not isinstance(data, dict) or "entries" not in data:
            raise ParseError("matrix must be an object with 'entries'", data)
        entries = data["entries"]
        if not isinstance(entries, list) or any(not isinstance(r, list) for r in entries):
            raise ParseError("'entries' must be a list of rows", entries)
        matrix = cls(entries, symmetric=symmetric, hermitian=hermitian)
        rows = data.get("rows", matrix.rows)
        cols = data.get("cols", matrix.cols)
        if (rows, cols) != matrix.shape:
            raise ParseError(f"declared shape {(rows, cols)} does not match entries {matrix.shape}")
        return matrix


def outer(u: Sequence[Scalar], v: Sequence[Scalar]) -> RMatrix:
    """u v^* (conjugating v)"""
    return RMatrix([[a * conjugate(b) for b in v] for a in u])

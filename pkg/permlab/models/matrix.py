"""Dense matrix and nonzero-pattern models."""

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from permlab.errors import NonFiniteError, ShapeError


@dataclass(frozen=True, eq=False)
class Matrix:
    """Dense, immutable, complex-capable matrix.

    Entries are stored row-major in a read-only complex128 array. All stored
    values are finite. Square-ness is validated only by the operations that
    need it (see ``require_square``).
    """

    data: np.ndarray

    def __post_init__(self) -> None:
        """Validate shape and finiteness, then freeze the buffer."""
        array = np.array(self.data, dtype=np.complex128, copy=True)
        if array.ndim != 2:
            raise ShapeError(f"matrix must be 2-dimensional, got {array.ndim} dimensions")
        if not np.all(np.isfinite(array)):
            raise NonFiniteError("matrix entries must be finite")
        array.setflags(write=False)
        object.__setattr__(self, "data", array)

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[complex]]) -> "Matrix":
        """Build a matrix from a sequence of equal-length rows."""
        rows = [list(r) for r in rows]
        widths = {len(r) for r in rows}
        if len(widths) > 1:
            raise ShapeError(f"ragged rows: lengths {sorted(widths)}")
        if not rows:
            return cls(np.zeros((0, 0), dtype=np.complex128))
        return cls(np.asarray(rows, dtype=np.complex128))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        """The n×n identity matrix."""
        return cls(np.eye(n, dtype=np.complex128))

    @classmethod
    def ones(cls, n: int) -> "Matrix":
        """The n×n all-ones matrix J_n."""
        return cls(np.ones((n, n), dtype=np.complex128))

    @property
    def n_rows(self) -> int:
        return int(self.data.shape[0])

    @property
    def n_cols(self) -> int:
        return int(self.data.shape[1])

    @property
    def is_square(self) -> bool:
        return self.n_rows == self.n_cols

    @property
    def is_real(self) -> bool:
        """True when every imaginary part is exactly zero."""
        return not np.any(self.data.imag)

    @property
    def entries(self) -> tuple[complex, ...]:
        """Row-major sequence of entries."""
        return tuple(complex(v) for v in self.data.ravel())

    @property
    def max_abs(self) -> float:
        """‖A‖_max, the largest entry magnitude (0 for an empty matrix)."""
        return float(np.abs(self.data).max()) if self.data.size else 0.0

    @property
    def real(self) -> np.ndarray:
        """Real parts as a float64 array."""
        return self.data.real.copy()

    def require_square(self, operation: str) -> int:
        """Return n for a square matrix, else raise ShapeError naming the operation."""
        if not self.is_square:
            raise ShapeError(
                f"{operation} requires a square matrix, got {self.n_rows}x{self.n_cols}"
            )
        return self.n_rows

    def has_negative_or_complex(self) -> bool:
        """True if any entry is not a nonnegative real."""
        return bool(np.any(self.data.imag != 0) or np.any(self.data.real < 0))

    def permuted(self, rows: Sequence[int] | None = None, cols: Sequence[int] | None = None):
        """Matrix with rows and/or columns reordered."""
        array = self.data
        if rows is not None:
            array = array[list(rows), :]
        if cols is not None:
            array = array[:, list(cols)]
        return Matrix(array)

    def transpose(self) -> "Matrix":
        return Matrix(self.data.T)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.data.shape == other.data.shape and bool(np.all(self.data == other.data))

    def __hash__(self) -> int:
        return hash((self.data.shape, self.data.tobytes()))


@dataclass(frozen=True)
class NonzeroPattern:
    """Row-major list of (row, col, value) for every nonzero entry.

    The ordering fixes the enumeration order of per-entry configuration
    spaces, so it must be deterministic.
    """

    triples: tuple[tuple[int, int, complex], ...]
    n_rows: int
    n_cols: int

    def __post_init__(self) -> None:
        """Validate that no listed value is zero."""
        for row, col, value in self.triples:
            if value == 0:
                raise ValueError(f"pattern lists a zero value at ({row}, {col})")

    @property
    def m(self) -> int:
        """Number of nonzero entries."""
        return len(self.triples)

    @property
    def rows(self) -> np.ndarray:
        return np.fromiter((t[0] for t in self.triples), dtype=np.intp, count=self.m)

    @property
    def cols(self) -> np.ndarray:
        return np.fromiter((t[1] for t in self.triples), dtype=np.intp, count=self.m)

    @property
    def values(self) -> np.ndarray:
        return np.fromiter((t[2] for t in self.triples), dtype=np.complex128, count=self.m)


def nonzeros(matrix: Matrix) -> NonzeroPattern:
    """List the nonzero entries of a matrix in row-major order."""
    rows, cols = np.nonzero(matrix.data)
    triples = tuple(
        (int(r), int(c), complex(matrix.data[r, c])) for r, c in zip(rows, cols)
    )
    return NonzeroPattern(triples=triples, n_rows=matrix.n_rows, n_cols=matrix.n_cols)

"""Interface for exact permanent algorithms."""

import math
from abc import ABC, abstractmethod
from dataclasses import replace

import numpy as np

from permlab.config import get_settings
from permlab.exact.kernel import ColumnAlphabet, KernelSum, column_sum_kernel
from permlab.models.matrix import Matrix
from permlab.models.results import ExactAlgorithm, ExactResult
from permlab.models.scaled import ScaledValue


class PermanentAlgorithm(ABC):
    """Abstract interface for exact permanent algorithms.

    Implementations must be deterministic: the same matrix gives the same
    bits regardless of worker count.
    """

    _ALGORITHM_VERSION = "1.0.0"

    def __init__(
        self,
        workers: int | None = None,
        block_bits: int | None = None,
        check_interval: int | None = None,
    ) -> None:
        """Initialize with optional overrides of the global kernel settings.

        Args:
            workers: Threads sharing the outer Gray range
            block_bits: log2 of the densely enumerated inner block size
            check_interval: Recompute row sums every this many outer steps (0 = off)
        """
        settings = get_settings()
        self._workers = workers if workers is not None else settings.workers
        self._block_bits = block_bits if block_bits is not None else settings.gray_block_bits
        self._check_interval = (
            check_interval if check_interval is not None else settings.gray_check_interval
        )

    @property
    @abstractmethod
    def algorithm(self) -> ExactAlgorithm:
        """Tag of this algorithm."""
        ...

    @property
    def algorithm_version(self) -> str:
        return self._ALGORITHM_VERSION

    @property
    def workers(self) -> int:
        return self._workers

    @abstractmethod
    def guard(self, n: int) -> None:
        """Raise SizeGuardError if n is beyond this algorithm's guard."""
        ...

    @abstractmethod
    def _compute(self, matrix: Matrix, n: int) -> ExactResult:
        ...

    def compute(self, matrix: Matrix) -> ExactResult:
        """Exact permanent of a square matrix.

        Raises:
            ShapeError: If the matrix is not square
            SizeGuardError: If n exceeds the guard and guards are not overridden
        """
        n = matrix.require_square(self.algorithm.value)
        self.guard(n)
        if n == 0:
            return ExactResult(value=ScaledValue.one(), terms_evaluated=1, algorithm=self.algorithm)
        scaled, shift = _normalize_rows(matrix)
        result = self._compute(scaled, n)
        if shift == 0:
            return result
        return replace(
            result,
            value=result.value.scale_pow2(shift),
            imaginary_residual=_ldexp_saturating(result.imaginary_residual, shift),
        )

    def _run_kernel(self, matrix: Matrix, alphabets: list[ColumnAlphabet]) -> KernelSum:
        return column_sum_kernel(
            matrix.data,
            alphabets,
            block_bits=self._block_bits,
            workers=self._workers,
            check_interval=self._check_interval,
        )


def _normalize_rows(matrix: Matrix) -> tuple[Matrix, int]:
    """Divide each row by a power of two so its largest entry lies in [0.5, 1).

    The permanent is linear in every row, so per(A) = 2**shift · per(scaled).
    Power-of-two scaling is exact; it keeps row-sum products inside the
    double range for large entries.
    """
    magnitudes = np.abs(matrix.data).max(axis=1)
    _, exponents = np.frexp(magnitudes)
    if not exponents.any():
        return matrix, 0
    column = -exponents[:, None]
    data = np.ldexp(matrix.data.real, column) + 1j * np.ldexp(matrix.data.imag, column)
    return Matrix(data), int(exponents.sum())


def _ldexp_saturating(value: float, power: int) -> float:
    try:
        return math.ldexp(value, power)
    except OverflowError:
        return math.inf

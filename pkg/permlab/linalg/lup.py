"""LUP factorization with partial pivoting and scaled determinants."""

from dataclasses import dataclass

import numpy as np

from permlab.models.matrix import Matrix
from permlab.models.scaled import ScaledValue


@dataclass(frozen=True, eq=False)
class LupFactors:
    """Factors with A[perm[i], :] = (L @ U)[i, :].

    L is unit lower triangular, U upper triangular. An exactly singular
    input keeps its zero pivot on the diagonal of U.
    """

    lower: np.ndarray
    upper: np.ndarray
    perm: tuple[int, ...]
    swap_parity: int

    def __post_init__(self) -> None:
        """Validate parity."""
        if self.swap_parity not in (1, -1):
            raise ValueError("swap_parity must be +1 or -1")

    @property
    def n(self) -> int:
        return int(self.upper.shape[0])

    @property
    def L(self) -> Matrix:  # noqa: N802
        return Matrix(self.lower)

    @property
    def U(self) -> Matrix:  # noqa: N802
        return Matrix(self.upper)

    def permuted_input(self, matrix: Matrix) -> np.ndarray:
        """The row-permuted input P·A that L·U reproduces."""
        return matrix.data[list(self.perm), :]

    def reconstruction_error(self, matrix: Matrix) -> float:
        """max |P·A - L·U| over all entries."""
        return float(np.abs(self.permuted_input(matrix) - self.lower @ self.upper).max())


def lup_decompose(matrix: Matrix) -> LupFactors:
    """Factor a square matrix with row pivoting by largest column magnitude."""
    n = matrix.require_square("lup_decompose")
    work = matrix.data.copy()
    lower = np.eye(n, dtype=np.complex128)
    perm = list(range(n))
    parity = 1

    for k in range(n):
        pivot_row = k + int(np.argmax(np.abs(work[k:, k])))
        if pivot_row != k:
            work[[k, pivot_row], :] = work[[pivot_row, k], :]
            lower[[k, pivot_row], :k] = lower[[pivot_row, k], :k]
            perm[k], perm[pivot_row] = perm[pivot_row], perm[k]
            parity = -parity
        pivot = work[k, k]
        if pivot == 0:
            # whole column below is zero too; nothing to eliminate
            continue
        factors = work[k + 1 :, k] / pivot
        lower[k + 1 :, k] = factors
        work[k + 1 :, k:] -= np.outer(factors, work[k, k:])
        work[k + 1 :, k] = 0

    upper = np.triu(work)
    return LupFactors(lower=lower, upper=upper, perm=tuple(perm), swap_parity=parity)


def determinant(matrix: Matrix) -> ScaledValue:
    """det A as a ScaledValue: swap parity times the product of U's pivots."""
    factors = lup_decompose(matrix)
    result = ScaledValue.from_complex(complex(factors.swap_parity))
    for pivot in np.diagonal(factors.upper):
        result = result * complex(pivot)
        if result.mantissa == 0:
            break
    return result


def batch_determinant(stack: np.ndarray) -> np.ndarray:
    """Determinants of a stack of square matrices, shape (K, n, n) -> (K,).

    Same elimination and pivoting rule as lup_decompose, vectorized over the
    leading axis. Values are plain complex; callers keep n small.
    """
    work = np.array(stack, dtype=np.complex128, copy=True)
    if work.ndim != 3 or work.shape[1] != work.shape[2]:
        raise ValueError(f"expected a (K, n, n) stack, got shape {work.shape}")
    count, n, _ = work.shape
    det = np.ones(count, dtype=np.complex128)
    batch = np.arange(count)

    for k in range(n):
        pivot_rows = k + np.argmax(np.abs(work[:, k:, k]), axis=1)
        swapped = pivot_rows != k
        if swapped.any():
            saved = work[batch, k, :].copy()
            work[batch, k, :] = work[batch, pivot_rows, :]
            work[batch, pivot_rows, :] = saved
            det[swapped] = -det[swapped]
        pivots = work[:, k, k]
        det *= pivots
        if k + 1 == n:
            break
        safe = np.where(pivots != 0, pivots, 1.0)
        factors = work[:, k + 1 :, k] / safe[:, None]
        work[:, k + 1 :, k:] -= factors[:, :, None] * work[:, None, k, k:]
    return det

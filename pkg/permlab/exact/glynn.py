"""Glynn's formula, single matrix and batched."""

import itertools
import logging

import numpy as np

from permlab.config import get_settings
from permlab.exact.interface import PermanentAlgorithm
from permlab.exact.kernel import ColumnAlphabet
from permlab.models.matrix import Matrix
from permlab.models.results import ExactAlgorithm, ExactResult
from permlab.models.scaled import ScaledValue

logger = logging.getLogger(__name__)

_PINNED = ColumnAlphabet(values=np.array([1.0]), weights=np.array([1.0]))
_SIGN = ColumnAlphabet(values=np.array([1.0, -1.0]), weights=np.array([1.0, -1.0]))

# Largest 2**(n-1) × n sign table the batched path materializes
_BATCH_CELLS = 2**22


class GlynnPermanent(PermanentAlgorithm):
    """(1/2**(n-1)) Σ'_s (Π_k s_k) Π_i Σ_j A_ij s_j with s_1 = +1."""

    @property
    def algorithm(self) -> ExactAlgorithm:
        return ExactAlgorithm.GLYNN

    def guard(self, n: int) -> None:
        guards = get_settings().guards
        guards.check("glynn n", n, guards.glynn_max_n)

    def _compute(self, matrix: Matrix, n: int) -> ExactResult:
        raw = self._run_kernel(matrix, [_PINNED] + [_SIGN] * (n - 1))
        return ExactResult(
            value=ScaledValue.from_complex(raw.total).scale_pow2(-(n - 1)),
            terms_evaluated=2 ** (n - 1),
            algorithm=self.algorithm,
            metadata={"outer_steps": raw.outer_steps, "drift_checks": raw.drift_checks},
        )


def per_glynn(matrix: Matrix) -> ExactResult:
    """Permanent by Glynn's formula in Gray-code order; n ≤ 30 unless overridden."""
    return GlynnPermanent().compute(matrix)


def _sign_table(n: int) -> np.ndarray:
    """All 2**(n-1) sign vectors with s_1 = +1, shape (2**(n-1), n)."""
    tails = np.array(list(itertools.product((1.0, -1.0), repeat=n - 1))).reshape(-1, n - 1)
    return np.hstack([np.ones((tails.shape[0], 1)), tails])


def per_glynn_batch(stack: np.ndarray) -> np.ndarray:
    """Glynn permanents of a (K, n, n) stack, returned as a (K,) complex array.

    Small n is evaluated as one einsum per chunk of matrices; larger n falls
    back to the Gray-code kernel one matrix at a time.
    """
    stack = np.asarray(stack)
    if stack.ndim != 3 or stack.shape[1] != stack.shape[2]:
        raise ValueError(f"expected a (K, n, n) stack, got shape {stack.shape}")
    count, n, _ = stack.shape
    if n == 0:
        return np.ones(count, dtype=np.complex128)

    cells = 2 ** (n - 1) * n
    if cells > _BATCH_CELLS:
        logger.debug("per_glynn_batch: n=%d falls back to the Gray-code kernel", n)
        algorithm = GlynnPermanent(workers=1)
        return np.array(
            [algorithm.compute(Matrix(m)).complex_value for m in stack], dtype=np.complex128
        )

    signs = _sign_table(n)
    weights = np.prod(signs, axis=1)
    chunk = max(1, _BATCH_CELLS // cells)
    out = np.empty(count, dtype=np.complex128)
    for start in range(0, count, chunk):
        block = stack[start : start + chunk]
        row_sums = np.einsum("kij,sj->ksi", block, signs)
        out[start : start + chunk] = np.prod(row_sums, axis=2) @ weights
    return out / 2 ** (n - 1)

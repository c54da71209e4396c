"""Ryser's inclusion-exclusion formula."""

import numpy as np

from permlab.config import get_settings
from permlab.exact.interface import PermanentAlgorithm
from permlab.exact.kernel import ColumnAlphabet
from permlab.models.matrix import Matrix
from permlab.models.results import ExactAlgorithm, ExactResult
from permlab.models.scaled import ScaledValue

# x_j = 1 puts column j in the subset T and contributes a factor -1
_MEMBERSHIP = ColumnAlphabet(values=np.array([0.0, 1.0]), weights=np.array([1.0, -1.0]))


class RyserPermanent(PermanentAlgorithm):
    """(-1)**n Σ_T (-1)**|T| Π_i Σ_{j∈T} A_ij over column subsets T."""

    @property
    def algorithm(self) -> ExactAlgorithm:
        return ExactAlgorithm.RYSER

    def guard(self, n: int) -> None:
        guards = get_settings().guards
        guards.check("ryser n", n, guards.ryser_max_n)

    def _compute(self, matrix: Matrix, n: int) -> ExactResult:
        raw = self._run_kernel(matrix, [_MEMBERSHIP] * n)
        value = ScaledValue.from_complex(raw.total)
        if n % 2:
            value = -value
        return ExactResult(
            value=value,
            # the empty subset contributes a zero product
            terms_evaluated=2**n - 1,
            algorithm=self.algorithm,
            metadata={"outer_steps": raw.outer_steps, "drift_checks": raw.drift_checks},
        )


def per_ryser(matrix: Matrix) -> ExactResult:
    """Permanent by Ryser's formula in Gray-code order; n ≤ 30 unless overridden."""
    return RyserPermanent().compute(matrix)

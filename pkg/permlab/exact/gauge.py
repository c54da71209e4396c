"""Full gauge sums over column signs (ℤ₂) and column phases (ℤₚ)."""

import logging

import numpy as np

from permlab.config import get_settings
from permlab.errors import ParameterError
from permlab.exact.interface import PermanentAlgorithm
from permlab.exact.kernel import ColumnAlphabet
from permlab.linalg.roots import root_table
from permlab.models.matrix import Matrix
from permlab.models.results import ExactAlgorithm, ExactResult
from permlab.models.scaled import ScaledValue

logger = logging.getLogger(__name__)

_SIGN = ColumnAlphabet(values=np.array([1.0, -1.0]), weights=np.array([1.0, -1.0]))

RESIDUAL_TOLERANCE = 1e-9


class GaugeZ2Permanent(PermanentAlgorithm):
    """(1/2**n) Σ_s (Π_k s_k) Π_i Σ_j A_ij s_j over all 2**n sign vectors."""

    @property
    def algorithm(self) -> ExactAlgorithm:
        return ExactAlgorithm.GAUGE_Z2

    def guard(self, n: int) -> None:
        guards = get_settings().guards
        guards.check("gauge-z2 n", n, guards.gauge_z2_max_n)

    def _compute(self, matrix: Matrix, n: int) -> ExactResult:
        raw = self._run_kernel(matrix, [_SIGN] * n)
        return ExactResult(
            value=ScaledValue.from_complex(raw.total).scale_pow2(-n),
            terms_evaluated=2**n,
            algorithm=self.algorithm,
            metadata={"outer_steps": raw.outer_steps, "drift_checks": raw.drift_checks},
        )


class GaugeZpPermanent(PermanentAlgorithm):
    """(1/p**n) Σ_q (Π_k ω**-q_k) Π_i Σ_j A_ij ω**q_j over all p**n phase vectors.

    Column phases are walked in reflected mixed-radix Gray order, so each
    outer step rotates one column. For real input the imaginary part is pure
    roundoff; it is dropped and its size kept as ``imaginary_residual``.
    """

    def __init__(self, p: int, **kernel_options: int | None) -> None:
        if p < 2:
            raise ParameterError(f"phase order p must be >= 2, got {p}")
        super().__init__(**kernel_options)
        self.p = p

    @property
    def algorithm(self) -> ExactAlgorithm:
        return ExactAlgorithm.GAUGE_ZP

    def guard(self, n: int) -> None:
        guards = get_settings().guards
        guards.check(f"gauge-zp terms {self.p}**{n} =", self.p**n, guards.gauge_zp_max_terms)

    def _compute(self, matrix: Matrix, n: int) -> ExactResult:
        roots = root_table(self.p)
        alphabet = ColumnAlphabet(values=roots, weights=np.conj(roots))
        raw = self._run_kernel(matrix, [alphabet] * n)
        total = raw.total / self.p**n

        residual = 0.0
        flagged = False
        if matrix.is_real:
            residual = abs(total.imag)
            # relative to Π_i max_j |A_ij|, so row scaling leaves the test unchanged
            scale = max(abs(total.real), float(np.prod(np.abs(matrix.data).max(axis=1))))
            flagged = residual > RESIDUAL_TOLERANCE * scale
            if flagged:
                logger.warning(
                    "gauge-zp: imaginary residual %.3e is large for real input (p=%d, n=%d)",
                    residual, self.p, n,
                )
            total = complex(total.real, 0.0)
        return ExactResult(
            value=ScaledValue.from_complex(total),
            terms_evaluated=self.p**n,
            algorithm=self.algorithm,
            imaginary_residual=residual,
            metadata={
                "p": self.p,
                "outer_steps": raw.outer_steps,
                "residual_flagged": flagged,
            },
        )


def per_gauge_z2_full(matrix: Matrix) -> ExactResult:
    """Permanent as the full 2**n-term sign gauge sum; n ≤ 26 unless overridden."""
    return GaugeZ2Permanent().compute(matrix)


def per_gauge_zp_full(matrix: Matrix, p: int) -> ExactResult:
    """Permanent as the full p**n-term phase gauge sum; p**n ≤ 2**26 unless overridden."""
    return GaugeZpPermanent(p).compute(matrix)

"""Complex-Gaussian integral estimators of the permanent.

For circular Gaussians φ with E[|φ_j|²] = 1, Wick's theorem gives
E[Π_i x_i y_i] = per C whenever E[x_i y_k] = C_ik. The LU and SVD forms
pick x and y as linear maps of φ and conj(φ) whose covariance is A.
"""

import logging
from dataclasses import dataclass
from typing import Any

import numpy as np

from permlab.errors import UnsupportedInputError
from permlab.estimators.interface import Estimator, EstimatorTag
from permlab.linalg.lup import LupFactors, lup_decompose
from permlab.linalg.svd import SvdFactors, svd_decompose
from permlab.models.matrix import Matrix
from permlab.models.results import EstimatorSample

logger = logging.getLogger(__name__)

_SQRT_HALF = np.sqrt(0.5)


@dataclass(frozen=True, eq=False)
class GaussianSampleVector:
    """n i.i.d. standard circular complex Gaussians."""

    values: np.ndarray

    @property
    def n(self) -> int:
        return int(self.values.shape[0])


def gaussian_batch(rng: np.random.Generator, size: int, n: int) -> np.ndarray:
    """(size, n) circular complex Gaussians with independent N(0, 1/2) parts."""
    parts = rng.standard_normal((size, n, 2))
    return (parts[..., 0] + 1j * parts[..., 1]) * _SQRT_HALF


def draw_gaussian_vector(n: int, rng: np.random.Generator) -> GaussianSampleVector:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return GaussianSampleVector(values=gaussian_batch(rng, 1, n)[0])


def _require_real(matrix: Matrix, estimator: str) -> None:
    if not matrix.is_real:
        raise UnsupportedInputError(f"{estimator} supports real matrices only")


class LuEstimator(Estimator):
    """Π_i (Σ_k conj(φ_k) U_ki)(Σ_j L_ij φ_j) from the pivoted factorization.

    Row pivoting does not change the permanent, so A[perm] = L U is used
    directly.
    """

    def __init__(self, matrix: Matrix) -> None:
        super().__init__(matrix)
        _require_real(matrix, self.tag.value)
        self.factors: LupFactors = lup_decompose(matrix)
        self._lower_t = self.factors.lower.real.T.copy()
        self._upper = self.factors.upper.real.copy()

    @property
    def tag(self) -> EstimatorTag:
        return EstimatorTag.LU_MC

    def integrand(self, phi: np.ndarray) -> np.ndarray:
        """Integrand values for a (K, n) array of Gaussian vectors."""
        return np.prod((np.conj(phi) @ self._upper) * (phi @ self._lower_t), axis=1)

    def sample_batch(self, rng: np.random.Generator, size: int) -> np.ndarray:
        return self.integrand(gaussian_batch(rng, size, self.n))


class SvdEstimator(Estimator):
    """Π_i (Σ_j U_ij √σ_j φ_j)(Σ_k V_ik √σ_k conj(φ_k)) over the nonzero σ only.

    A rank-r input draws exactly r Gaussian components per sample.
    """

    def __init__(self, matrix: Matrix) -> None:
        super().__init__(matrix)
        _require_real(matrix, self.tag.value)
        self.factors: SvdFactors = svd_decompose(matrix)
        rank = self.factors.rank
        root_sigma = np.sqrt(self.factors.sigma[:rank])
        self._left = (self.factors.left[:, :rank] * root_sigma).T.copy()
        self._right = (self.factors.right[:, :rank] * root_sigma).T.copy()
        logger.debug("svd-mc: rank %d of %d", rank, self.n)

    @property
    def tag(self) -> EstimatorTag:
        return EstimatorTag.SVD_MC

    @property
    def components(self) -> int:
        """Gaussian components drawn per sample."""
        return self.factors.rank

    @property
    def parameters(self) -> dict[str, Any]:
        return {"components": self.components}

    def integrand(self, phi: np.ndarray) -> np.ndarray:
        """Integrand values for a (K, rank) array of Gaussian vectors."""
        return np.prod((phi @ self._left) * (np.conj(phi) @ self._right), axis=1)

    def sample_batch(self, rng: np.random.Generator, size: int) -> np.ndarray:
        return self.integrand(gaussian_batch(rng, size, self.components))


def sample_lu_integrand(matrix: Matrix, rng: np.random.Generator) -> EstimatorSample:
    return LuEstimator(matrix).sample(rng)


def sample_svd_integrand(matrix: Matrix, rng: np.random.Generator) -> EstimatorSample:
    return SvdEstimator(matrix).sample(rng)

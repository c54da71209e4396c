"""One-sided Jacobi singular value decomposition for real square matrices."""

import logging
import math
from dataclasses import dataclass

import numpy as np

from permlab.config import get_settings
from permlab.errors import ConvergenceError, UnsupportedInputError
from permlab.models.matrix import Matrix

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class SvdFactors:
    """A = U · diag(sigma) · Vᵀ with orthogonal U, V and sigma nonincreasing.

    Singular values at or below tolerance · sigma[0] are stored as exact
    zeros and not counted in rank; the matching columns of U complete an
    orthonormal basis.
    """

    left: np.ndarray
    right: np.ndarray
    sigma: np.ndarray
    rank: int
    sweeps: int = 0

    @property
    def U(self) -> Matrix:  # noqa: N802
        return Matrix(self.left)

    @property
    def V(self) -> Matrix:  # noqa: N802
        return Matrix(self.right)

    def reconstruct(self) -> np.ndarray:
        return (self.left * self.sigma) @ self.right.T


def _off_diagonal(work: np.ndarray, i: int, j: int) -> tuple[float, float, float]:
    alpha = float(work[:, i] @ work[:, i])
    beta = float(work[:, j] @ work[:, j])
    gamma = float(work[:, i] @ work[:, j])
    return alpha, beta, gamma


def svd_decompose(matrix: Matrix) -> SvdFactors:
    """Hestenes one-sided Jacobi SVD.

    Sweeps over all column pairs until every normalized off-diagonal inner
    product is below the tolerance, or the sweep cap is reached.
    """
    n = matrix.require_square("svd_decompose")
    if not matrix.is_real:
        raise UnsupportedInputError("svd_decompose supports real matrices only")
    config = get_settings().svd

    work = matrix.real
    right = np.eye(n)
    scale = float(np.abs(work).max()) if n else 0.0
    floor = (np.finfo(float).eps * scale) ** 2

    residual = 0.0
    sweeps = 0
    converged = n < 2 or scale == 0.0
    while not converged:
        if sweeps >= config.max_sweeps:
            raise ConvergenceError(
                f"Jacobi SVD did not converge in {config.max_sweeps} sweeps "
                f"(residual {residual:.3e})",
                residual=residual,
            )
        sweeps += 1
        residual = 0.0
        for i in range(n - 1):
            for j in range(i + 1, n):
                alpha, beta, gamma = _off_diagonal(work, i, j)
                if alpha <= floor or beta <= floor or gamma == 0.0:
                    continue
                off = abs(gamma) / math.sqrt(alpha * beta)
                residual = max(residual, off)
                if off < config.tolerance:
                    continue
                zeta = (beta - alpha) / (2.0 * gamma)
                t = math.copysign(1.0, zeta) / (abs(zeta) + math.sqrt(1.0 + zeta * zeta))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = c * t
                col_i = work[:, i].copy()
                work[:, i] = c * col_i - s * work[:, j]
                work[:, j] = s * col_i + c * work[:, j]
                vec_i = right[:, i].copy()
                right[:, i] = c * vec_i - s * right[:, j]
                right[:, j] = s * vec_i + c * right[:, j]
        converged = residual < config.tolerance
    logger.debug("Jacobi SVD converged after %d sweeps (residual %.3e)", sweeps, residual)

    norms = np.linalg.norm(work, axis=0) if n else np.zeros(0)
    order = np.argsort(-norms, kind="stable")
    norms = norms[order]
    work = work[:, order]
    right = right[:, order]

    top = norms[0] if n else 0.0
    keep = norms > config.tolerance * top if top > 0 else np.zeros(n, dtype=bool)
    rank = int(keep.sum())
    sigma = np.where(keep, norms, 0.0)

    left = np.zeros((n, n))
    left[:, :rank] = work[:, :rank] / norms[:rank]
    if rank < n:
        # complete to an orthonormal basis; Householder Q is orthogonal whatever the rank
        q, _ = np.linalg.qr(np.hstack([left[:, :rank], np.eye(n)]), mode="complete")
        left[:, rank:] = q[:, rank:n]

    return SvdFactors(left=left, right=right, sigma=sigma, rank=rank, sweeps=sweeps)

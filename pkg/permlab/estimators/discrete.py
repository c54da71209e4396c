"""Discrete Hubbard-Stratonovich estimators.

Each nonzero A_ij (or each column, for the gauge estimator) gets a random
multiplier: a sign, or a p-th root of unity ω**q with q uniform in 1..p.
Averaged over all configurations every estimator here equals per A.
"""

from typing import Any

import numpy as np

from permlab.config import get_settings
from permlab.errors import EstimatorDomainError, ParameterError
from permlab.estimators.interface import (
    DiscreteEstimator,
    EstimatorTag,
    require_nonnegative,
    require_phase_order,
)
from permlab.exact.glynn import per_glynn_batch
from permlab.linalg.lup import batch_determinant
from permlab.linalg.roots import phases, root_table
from permlab.models.matrix import Matrix, nonzeros
from permlab.models.results import EstimatorSample
from permlab.models.scheme import DecouplingScheme, scheme_to_document


class EntryEstimator(DiscreteEstimator):
    """Base for estimators with one random variable per nonzero entry.

    Entries must be nonnegative reals so that √A_ij is real.
    """

    def __init__(self, matrix: Matrix) -> None:
        super().__init__(matrix)
        require_nonnegative(matrix, self.tag.value)
        self.pattern = nonzeros(matrix)
        self._rows = self.pattern.rows
        self._cols = self.pattern.cols
        self._roots = np.sqrt(self.pattern.values.real)

    @property
    def m(self) -> int:
        return self.pattern.m

    def _fill(self, multipliers: np.ndarray) -> np.ndarray:
        """Stack of matrices with √A_ij × multiplier at each nonzero, shape (K, n, n)."""
        stack = np.zeros((multipliers.shape[0], self.n, self.n), dtype=multipliers.dtype)
        stack[:, self._rows, self._cols] = self._roots * multipliers
        return stack


class GodsilGutmanEstimator(EntryEstimator):
    """(det G)² with G_ij = √A_ij s_ij and independent random signs s_ij."""

    nonnegative = True

    @property
    def tag(self) -> EstimatorTag:
        return EstimatorTag.GODSIL_GUTMAN

    @property
    def radices(self) -> tuple[int, ...]:
        return (2,) * self.m

    def evaluate_batch(self, configs: np.ndarray) -> np.ndarray:
        signs = phases(configs, 2).real
        det = batch_determinant(self._fill(signs))
        return (det.real**2).astype(np.complex128)


class KkllEstimator(EntryEstimator):
    """|det H|² with H_ij = √A_ij ω**q_ij; p = 3 is the cube-root-of-unity estimator."""

    nonnegative = True

    def __init__(self, matrix: Matrix, p: int = 3) -> None:
        self.p = require_phase_order(p)
        super().__init__(matrix)

    @property
    def tag(self) -> EstimatorTag:
        return EstimatorTag.KKLL

    @property
    def parameters(self) -> dict[str, Any]:
        return {"p": self.p}

    @property
    def radices(self) -> tuple[int, ...]:
        return (self.p,) * self.m

    def evaluate_batch(self, configs: np.ndarray) -> np.ndarray:
        det = batch_determinant(self._fill(phases(configs, self.p)))
        return (det.real**2 + det.imag**2).astype(np.complex128)


class CustomSchemeEstimator(EntryEstimator):
    """|det H|² where each entry follows its own scheme entry.

    The multiplier of entry k is (random sign or random p_k-th root) × fixed_k.
    """

    nonnegative = True

    def __init__(self, matrix: Matrix, scheme: DecouplingScheme) -> None:
        super().__init__(matrix)
        scheme.validate_against(self.pattern)
        self.scheme = scheme
        self._fixed = np.array([e.fixed for e in scheme.entries], dtype=np.complex128)
        groups: dict[int, list[int]] = {}
        for index, entry in enumerate(scheme.entries):
            groups.setdefault(entry.p, []).append(index)
        self._groups = {p: np.array(indices, dtype=np.intp) for p, indices in groups.items()}

    @property
    def tag(self) -> EstimatorTag:
        return EstimatorTag.CUSTOM

    @property
    def parameters(self) -> dict[str, Any]:
        return {"scheme": scheme_to_document(self.scheme)}

    @property
    def radices(self) -> tuple[int, ...]:
        return self.scheme.radices

    def multipliers(self, configs: np.ndarray) -> np.ndarray:
        """Per-entry multipliers for a batch of configurations, shape (K, m)."""
        out = np.empty(configs.shape, dtype=np.complex128)
        for p, indices in self._groups.items():
            out[:, indices] = root_table(p)[configs[:, indices]]
        return out * self._fixed

    def evaluate_batch(self, configs: np.ndarray) -> np.ndarray:
        det = batch_determinant(self._fill(self.multipliers(configs)))
        return (det.real**2 + det.imag**2).astype(np.complex128)


class PairingEstimator(EntryEstimator):
    """Pairing channel: Π_i conj(column sum i) × (row sum i) of W_ij = √A_ij ω**q_ij."""

    def __init__(self, matrix: Matrix, p: int = 2) -> None:
        self.p = require_phase_order(p)
        super().__init__(matrix)

    @property
    def tag(self) -> EstimatorTag:
        return EstimatorTag.PAIRING

    @property
    def parameters(self) -> dict[str, Any]:
        return {"p": self.p}

    @property
    def radices(self) -> tuple[int, ...]:
        return (self.p,) * self.m

    def evaluate_batch(self, configs: np.ndarray) -> np.ndarray:
        weighted = self._fill(phases(configs, self.p))
        column_sums = weighted.sum(axis=1)
        row_sums = weighted.sum(axis=2)
        return np.prod(np.conj(column_sums) * row_sums, axis=1)


class GaugeEstimator(DiscreteEstimator):
    """Sampled gauge formula: (Π_k ω**-q_k) Π_i Σ_j A_ij ω**q_j.

    One phase per column; any real or complex A is allowed.
    """

    def __init__(self, matrix: Matrix, p: int = 2) -> None:
        self.p = require_phase_order(p)
        super().__init__(matrix)
        self._data = matrix.data

    @property
    def tag(self) -> EstimatorTag:
        return EstimatorTag.GAUGE

    @property
    def parameters(self) -> dict[str, Any]:
        return {"p": self.p}

    @property
    def radices(self) -> tuple[int, ...]:
        return (self.p,) * self.n

    def evaluate_batch(self, configs: np.ndarray) -> np.ndarray:
        x = phases(configs, self.p)
        return np.prod(np.conj(x), axis=1) * np.prod(x @ self._data.T, axis=1)


class RecursiveEstimator(EntryEstimator):
    """(per G)² with G_ij = √A_ij s_ij, the inner permanent by Glynn.

    With depth > 1 the inner permanent is itself estimated: the square is
    replaced by the product of two independent depth - 1 estimates of per G.
    Below the top level G has signed entries and the principal complex square
    root is used.
    """

    def __init__(self, matrix: Matrix, depth: int = 1) -> None:
        if depth < 1:
            raise ParameterError(f"recursion depth must be >= 1, got {depth}")
        super().__init__(matrix)
        guards = get_settings().guards
        guards.check("recursive n", self.n, guards.recursive_max_n)
        self.depth = depth
        self.nonnegative = depth == 1

    @property
    def tag(self) -> EstimatorTag:
        return EstimatorTag.RECURSIVE

    @property
    def parameters(self) -> dict[str, Any]:
        return {"depth": self.depth}

    @property
    def radices(self) -> tuple[int, ...]:
        return (2,) * self.m

    def evaluate_batch(self, configs: np.ndarray) -> np.ndarray:
        if self.depth != 1:
            raise ParameterError("only depth 1 has an enumerable configuration space")
        signs = phases(configs, 2).real
        inner = per_glynn_batch(self._fill(signs))
        return (inner.real**2).astype(np.complex128)

    def sample_batch(self, rng: np.random.Generator, size: int) -> np.ndarray:
        if self.depth == 1:
            return super().sample_batch(rng, size)
        top = np.broadcast_to(self.matrix.data, (size, self.n, self.n))
        return _sample_depth(top, self.depth, rng)

    def sample(self, rng: np.random.Generator) -> EstimatorSample:
        if self.depth == 1:
            return super().sample(rng)
        return EstimatorSample(value=complex(self.sample_batch(rng, 1)[0]))


def _sample_depth(stack: np.ndarray, depth: int, rng: np.random.Generator) -> np.ndarray:
    """One unbiased estimate of per B for each B in the stack."""
    signs = rng.integers(0, 2, size=stack.shape) * 2 - 1
    decoupled = np.sqrt(stack.astype(np.complex128)) * signs
    if depth == 1:
        return per_glynn_batch(decoupled) ** 2
    return _sample_depth(decoupled, depth - 1, rng) * _sample_depth(decoupled, depth - 1, rng)


def pairing_row_column_product(matrix: Matrix, signs: np.ndarray) -> complex:
    """Product of all row sums and column sums of a signed 0-1 matrix.

    ``signs`` holds ±1 for each nonzero in row-major order. This is the
    pairing-channel sample with p = 2 for a 0-1 matrix.
    """
    pattern = nonzeros(matrix)
    if not np.all(pattern.values == 1):
        raise EstimatorDomainError("row-column product form needs a 0-1 matrix")
    signs = np.asarray(signs)
    if signs.shape != (pattern.m,) or not np.all(np.abs(signs) == 1):
        raise ParameterError(f"expected {pattern.m} signs of ±1")
    signed = np.zeros(matrix.data.shape)
    signed[pattern.rows, pattern.cols] = signs
    return complex(np.prod(signed.sum(axis=0) * signed.sum(axis=1)))


def sample_godsil_gutman(matrix: Matrix, rng: np.random.Generator) -> EstimatorSample:
    return GodsilGutmanEstimator(matrix).sample(rng)


def sample_kkll_zp(matrix: Matrix, p: int, rng: np.random.Generator) -> EstimatorSample:
    return KkllEstimator(matrix, p).sample(rng)


def sample_custom_scheme(
    matrix: Matrix, scheme: DecouplingScheme, rng: np.random.Generator
) -> EstimatorSample:
    return CustomSchemeEstimator(matrix, scheme).sample(rng)


def sample_pairing(matrix: Matrix, p: int, rng: np.random.Generator) -> EstimatorSample:
    return PairingEstimator(matrix, p).sample(rng)


def sample_gauge_zp(matrix: Matrix, p: int, rng: np.random.Generator) -> EstimatorSample:
    return GaugeEstimator(matrix, p).sample(rng)


def sample_recursive(
    matrix: Matrix, rng: np.random.Generator, depth: int = 1
) -> EstimatorSample:
    return RecursiveEstimator(matrix, depth).sample(rng)

"""Interface for unbiased permanent estimators."""

import math
from abc import ABC, abstractmethod
from enum import Enum
from typing import Any

import numpy as np

from permlab.errors import EstimatorDomainError, ParameterError, ShapeError
from permlab.models.matrix import Matrix
from permlab.models.results import Configuration, EstimatorSample


class EstimatorTag(str, Enum):
    """Estimator names as used on the command line."""

    GODSIL_GUTMAN = "gg"
    KKLL = "kkll"
    PAIRING = "pairing"
    GAUGE = "gauge"
    CUSTOM = "custom"
    RECURSIVE = "recursive"
    LU_MC = "lu-mc"
    SVD_MC = "svd-mc"


class Estimator(ABC):
    """Abstract interface for unbiased estimators of per A.

    Implementations are bound to one matrix at construction (factorizations
    and square roots are computed once) and are read-only afterwards, so a
    single instance can be shared by every stream.
    """

    _ALGORITHM_VERSION = "1.0.0"

    #: Samples are real and nonnegative (|·|² forms)
    nonnegative: bool = False

    def __init__(self, matrix: Matrix) -> None:
        n = matrix.require_square(self.tag.value)
        if n == 0:
            raise ShapeError(f"{self.tag.value} requires a non-empty matrix")
        self.matrix = matrix
        self.n = n

    @property
    @abstractmethod
    def tag(self) -> EstimatorTag:
        ...

    @property
    def algorithm_version(self) -> str:
        return self._ALGORITHM_VERSION

    @property
    def parameters(self) -> dict[str, Any]:
        """Estimator parameters recorded in reports."""
        return {}

    @abstractmethod
    def sample_batch(self, rng: np.random.Generator, size: int) -> np.ndarray:
        """Draw `size` i.i.d. samples as a complex array."""
        ...

    def sample(self, rng: np.random.Generator) -> EstimatorSample:
        value = complex(self.sample_batch(rng, 1)[0])
        return EstimatorSample(value=value, nonnegative=self.nonnegative)


class DiscreteEstimator(Estimator):
    """Estimator averaging over a finite configuration space.

    Variable k takes values v in [0, radices[k]), standing for the phase
    exponent q = v + 1. Configurations are drawn uniformly.
    """

    @property
    @abstractmethod
    def radices(self) -> tuple[int, ...]:
        ...

    @property
    def config_space_size(self) -> int:
        return math.prod(self.radices)

    @abstractmethod
    def evaluate_batch(self, configs: np.ndarray) -> np.ndarray:
        """Estimator values for a (K, len(radices)) integer array of configurations."""
        ...

    def draw_configs(self, rng: np.random.Generator, size: int) -> np.ndarray:
        radices = np.asarray(self.radices, dtype=np.int64)
        if radices.size == 0:
            return np.zeros((size, 0), dtype=np.int64)
        return rng.integers(0, radices, size=(size, radices.size))

    def sample_batch(self, rng: np.random.Generator, size: int) -> np.ndarray:
        return self.evaluate_batch(self.draw_configs(rng, size))

    def sample(self, rng: np.random.Generator) -> EstimatorSample:
        configs = self.draw_configs(rng, 1)
        value = complex(self.evaluate_batch(configs)[0])
        config = Configuration.from_array(configs[0], self.radices)
        return EstimatorSample(value=value, config=config, nonnegative=self.nonnegative)


def require_nonnegative(matrix: Matrix, estimator: str) -> None:
    """Raise EstimatorDomainError unless every entry is a nonnegative real."""
    if not matrix.has_negative_or_complex():
        return
    rows, cols = np.nonzero((matrix.data.real < 0) | (matrix.data.imag != 0))
    row, col = int(rows[0]), int(cols[0])
    kind = "negative entry" if matrix.data[row, col].imag == 0 else "complex entry"
    raise EstimatorDomainError(
        f"{estimator}: {kind} at ({row}, {col}); use the gauge estimator "
        "or a custom scheme with fixed multipliers"
    )


def require_phase_order(p: int) -> int:
    if p < 2:
        raise ParameterError(f"phase order p must be >= 2, got {p}")
    return p

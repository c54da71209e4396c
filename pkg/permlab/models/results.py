"""Result models for exact algorithms, estimator samples and enumerations."""

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Any

import numpy as np

from permlab.models.scaled import ScaledValue


class ExactAlgorithm(str, Enum):
    """Exact permanent algorithms."""

    NAIVE = "naive"
    RYSER = "ryser"
    GLYNN = "glynn"
    GAUGE_Z2 = "gauge-z2"
    GAUGE_ZP = "gauge-zp"


@dataclass(frozen=True)
class ExactResult:
    """Value of an exact permanent computation.

    terms_evaluated is n! (naive), 2**n - 1 (Ryser), 2**(n-1) (Glynn),
    2**n (gauge-ℤ₂) or p**n (gauge-ℤₚ).
    """

    value: ScaledValue
    terms_evaluated: int
    algorithm: ExactAlgorithm
    imaginary_residual: float = 0.0
    metadata: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        """Validate result constraints."""
        if self.terms_evaluated < 0:
            raise ValueError("terms_evaluated cannot be negative")

    @property
    def complex_value(self) -> complex:
        return self.value.to_complex()


@dataclass(frozen=True)
class Configuration:
    """One assignment of the decoupling variables.

    values[k] lies in [0, radices[k]); value v stands for the root-of-unity
    exponent q = v + 1, so q ranges over 1..p. With p = 2 the multiplier
    ω**q is the sign (-1)**q.
    """

    values: tuple[int, ...]
    radices: tuple[int, ...]

    def __post_init__(self) -> None:
        """Validate digit ranges."""
        if len(self.values) != len(self.radices):
            raise ValueError("configuration and radix lengths differ")
        for value, radix in zip(self.values, self.radices):
            if not 0 <= value < radix:
                raise ValueError(f"configuration value {value} outside [0, {radix})")

    @property
    def config_space_size(self) -> int:
        return math.prod(self.radices)

    @classmethod
    def from_array(cls, values: np.ndarray, radices: tuple[int, ...]) -> "Configuration":
        return cls(values=tuple(int(v) for v in values), radices=radices)


@dataclass(frozen=True)
class EstimatorSample:
    """A single estimator draw and the configuration that produced it."""

    value: complex
    config: Configuration | None = None
    nonnegative: bool = False  # drawn from a |·|² form

    def __post_init__(self) -> None:
        """Validate finiteness, and sign for nonnegative-real estimators."""
        if not (math.isfinite(self.value.real) and math.isfinite(self.value.imag)):
            raise ValueError("estimator sample must be finite")
        if self.nonnegative and (self.value.imag != 0 or self.value.real < 0):
            raise ValueError(f"estimator sample {self.value} must be a nonnegative real")


@dataclass(frozen=True)
class EnumerationResult:
    """Exact mean and second absolute moment over a whole configuration space."""

    estimator: str
    mean: complex
    second_moment: float
    config_space_size: int
    parameters: dict[str, Any] = field(default_factory=dict)

    @property
    def variance(self) -> float:
        """E|X - μ|² = E|X|² - |μ|², clipped at 0 against roundoff."""
        return max(0.0, self.second_moment - abs(self.mean) ** 2)

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary for serialization."""
        return {
            "estimator": self.estimator,
            "mean": {"re": self.mean.real, "im": self.mean.imag},
            "second_moment": self.second_moment,
            "variance": self.variance,
            "config_space_size": self.config_space_size,
            "parameters": self.parameters,
        }

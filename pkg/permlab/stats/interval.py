"""Normal-approximation confidence intervals."""

import math
from dataclasses import dataclass
from statistics import NormalDist

from permlab.errors import InsufficientDataError, ParameterError
from permlab.stats.moments import RunningMoments


@dataclass(frozen=True)
class IntervalEstimate:
    """Confidence interval on the real part of the mean.

    The imaginary part of the mean and its standard error are carried along
    but do not enter the half-width.
    """

    point: complex
    half_width: float
    confidence: float
    samples_used: int
    std_error: float = 0.0
    std_error_im: float = 0.0

    def __post_init__(self) -> None:
        """Validate interval constraints."""
        if self.half_width < 0:
            raise ValueError("half_width cannot be negative")
        if not 0.0 < self.confidence < 1.0:
            raise ValueError("confidence must be in (0, 1)")

    @property
    def lower(self) -> float:
        return self.point.real - self.half_width

    @property
    def upper(self) -> float:
        return self.point.real + self.half_width

    @property
    def relative_half_width(self) -> float:
        """half_width / |point|; 0 when both are 0, inf for a zero point otherwise."""
        if self.half_width == 0:
            return 0.0
        if self.point.real == 0:
            return math.inf
        return self.half_width / abs(self.point.real)

    def contains(self, value: float) -> bool:
        return self.lower <= value <= self.upper


def z_value(confidence: float) -> float:
    """Two-sided standard normal quantile."""
    return NormalDist().inv_cdf(0.5 + confidence / 2.0)


def interval(acc: RunningMoments, confidence: float = 0.95) -> IntervalEstimate:
    """Normal-approximation interval on the real part of the mean.

    Raises:
        InsufficientDataError: If fewer than 2 samples were accumulated
        ParameterError: If confidence is not in (0, 1)
    """
    if not 0.0 < confidence < 1.0:
        raise ParameterError(f"confidence must be in (0, 1), got {confidence}")
    if acc.count < 2:
        raise InsufficientDataError(f"interval needs at least 2 samples, got {acc.count}")
    std_error = acc.std_error_re
    return IntervalEstimate(
        point=acc.mean,
        half_width=z_value(confidence) * std_error,
        confidence=confidence,
        samples_used=acc.count,
        std_error=std_error,
        std_error_im=acc.std_error_im,
    )

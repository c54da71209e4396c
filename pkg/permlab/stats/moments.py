"""Mergeable streaming moments for complex-valued samples."""

import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from permlab.errors import NonFiniteError


@dataclass(frozen=True)
class RunningMoments:
    """Count, means and central moment sums of a complex sample stream.

    Central sums of powers 2..4 are kept for the real part (kurtosis is
    reported on the real part), the second central sum for the imaginary
    part and for |x|. Two accumulators merge with the pairwise update
    formulas, so accumulating chunks in parallel and merging gives the
    whole-stream result.
    """

    count: int = 0
    mean_re: float = 0.0
    mean_im: float = 0.0
    m2_re: float = 0.0
    m3_re: float = 0.0
    m4_re: float = 0.0
    m2_im: float = 0.0
    mean_abs: float = 0.0
    m2_abs: float = 0.0
    max_abs: float = 0.0

    def __post_init__(self) -> None:
        """Validate count and non-negative sums of squares."""
        if self.count < 0:
            raise ValueError("count cannot be negative")
        if min(self.m2_re, self.m2_im, self.m2_abs) < 0:
            raise ValueError("sums of squared deviations cannot be negative")

    @classmethod
    def from_samples(cls, samples: Iterable[complex] | np.ndarray) -> "RunningMoments":
        """Two-pass moments of a batch of samples."""
        values = np.asarray(samples, dtype=np.complex128).ravel()
        if values.size == 0:
            return cls()
        if not np.all(np.isfinite(values)):
            raise NonFiniteError("samples must be finite")
        re = values.real
        im = values.imag
        magnitude = np.abs(values)
        if np.all(values == values[0]):
            # constant batches keep an exact mean and zero spread
            mean_re, mean_im = float(re[0]), float(im[0])
            mean_abs = float(magnitude[0])
        else:
            mean_re = float(re.mean())
            mean_im = float(im.mean())
            mean_abs = float(magnitude.mean())
        d = re - mean_re
        d2 = d * d
        return cls(
            count=int(values.size),
            mean_re=mean_re,
            mean_im=mean_im,
            m2_re=float(d2.sum()),
            m3_re=float((d2 * d).sum()),
            m4_re=float((d2 * d2).sum()),
            m2_im=float(((im - mean_im) ** 2).sum()),
            mean_abs=mean_abs,
            m2_abs=float(((magnitude - mean_abs) ** 2).sum()),
            max_abs=float(magnitude.max()),
        )

    def update(self, x: complex) -> "RunningMoments":
        """Accumulator with one more sample."""
        return self.merge(RunningMoments.from_samples([x]))

    def update_batch(self, samples: Iterable[complex] | np.ndarray) -> "RunningMoments":
        """Accumulator with a whole batch folded in."""
        return self.merge(RunningMoments.from_samples(samples))

    def merge(self, other: "RunningMoments") -> "RunningMoments":
        """Pairwise combination; equals accumulating both streams in one."""
        if other.count == 0:
            return self
        if self.count == 0:
            return other
        na, nb = float(self.count), float(other.count)
        n = na + nb

        delta = other.mean_re - self.mean_re
        delta2 = delta * delta
        m2 = self.m2_re + other.m2_re + delta2 * na * nb / n
        m3 = (
            self.m3_re
            + other.m3_re
            + delta * delta2 * na * nb * (na - nb) / (n * n)
            + 3.0 * delta * (na * other.m2_re - nb * self.m2_re) / n
        )
        m4 = (
            self.m4_re
            + other.m4_re
            + delta2 * delta2 * na * nb * (na * na - na * nb + nb * nb) / (n * n * n)
            + 6.0 * delta2 * (na * na * other.m2_re + nb * nb * self.m2_re) / (n * n)
            + 4.0 * delta * (na * other.m3_re - nb * self.m3_re) / n
        )

        delta_im = other.mean_im - self.mean_im
        delta_abs = other.mean_abs - self.mean_abs
        return RunningMoments(
            count=self.count + other.count,
            mean_re=self.mean_re + delta * nb / n,
            mean_im=self.mean_im + delta_im * nb / n,
            m2_re=m2,
            m3_re=m3,
            m4_re=m4,
            m2_im=self.m2_im + other.m2_im + delta_im * delta_im * na * nb / n,
            mean_abs=self.mean_abs + delta_abs * nb / n,
            m2_abs=self.m2_abs + other.m2_abs + delta_abs * delta_abs * na * nb / n,
            max_abs=max(self.max_abs, other.max_abs),
        )

    @property
    def mean(self) -> complex:
        return complex(self.mean_re, self.mean_im)

    def _unbiased(self, m2: float) -> float:
        return m2 / (self.count - 1) if self.count > 1 else 0.0

    @property
    def variance(self) -> float:
        """E|X - μ|² with divisor count - 1 (real plus imaginary variance)."""
        return self._unbiased(self.m2_re + self.m2_im)

    @property
    def variance_re(self) -> float:
        return self._unbiased(self.m2_re)

    @property
    def variance_im(self) -> float:
        return self._unbiased(self.m2_im)

    @property
    def variance_abs(self) -> float:
        return self._unbiased(self.m2_abs)

    @property
    def std_error_re(self) -> float:
        return math.sqrt(self.variance_re / self.count) if self.count > 1 else 0.0

    @property
    def std_error_im(self) -> float:
        return math.sqrt(self.variance_im / self.count) if self.count > 1 else 0.0

    @property
    def excess_kurtosis(self) -> float:
        """n·M4/M2² - 3 of the real part; 0 for a constant stream."""
        if self.m2_re == 0:
            return 0.0
        return self.count * self.m4_re / (self.m2_re * self.m2_re) - 3.0


def update(acc: RunningMoments, x: complex) -> RunningMoments:
    """Fold one finite sample into an accumulator."""
    return acc.update(x)


def merge(a: RunningMoments, b: RunningMoments) -> RunningMoments:
    """Combine two accumulators."""
    return a.merge(b)

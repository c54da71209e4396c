"""Checkpointed sequential sampling with a relative-precision stopping rule."""

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from permlab.config import get_settings
from permlab.errors import ParameterError
from permlab.estimators.streams import EstimatorStream
from permlab.stats.interval import IntervalEstimate, interval
from permlab.stats.moments import RunningMoments

logger = logging.getLogger(__name__)

TARGET_NOT_MET = "target not met"


@dataclass(frozen=True)
class StopRule:
    """When to stop sampling: a sample cap, a relative half-width target, or both."""

    max_samples: int | None = None
    epsilon: float | None = None
    confidence: float = 0.95

    def __post_init__(self) -> None:
        """Validate that the rule can terminate."""
        if self.max_samples is None and self.epsilon is None:
            raise ParameterError("stop rule needs max_samples or epsilon")
        if self.max_samples is not None and self.max_samples < 1:
            raise ParameterError(f"max_samples must be positive, got {self.max_samples}")
        if self.epsilon is not None and not self.epsilon > 0:
            raise ParameterError(f"epsilon must be > 0, got {self.epsilon}")
        if not 0.0 < self.confidence < 1.0:
            raise ParameterError(f"confidence must be in (0, 1), got {self.confidence}")


@dataclass
class RunOutcome:
    """Final accumulator and interval of a run, with its diagnostics."""

    moments: RunningMoments
    interval: IntervalEstimate | None
    target_met: bool
    checkpoints: int
    warnings: list[str] = field(default_factory=list)


def _met(estimate: IntervalEstimate | None, epsilon: float | None) -> bool:
    if estimate is None or epsilon is None:
        return False
    return estimate.relative_half_width <= epsilon


def _diagnose(
    moments: RunningMoments,
    scaled_widths: list[float],
    expect_real: bool,
) -> list[str]:
    """Heavy-tail and imaginary-residual warnings for a finished run."""
    sampling = get_settings().sampling
    warnings: list[str] = []
    kurtosis = moments.excess_kurtosis
    if kurtosis > sampling.kurtosis_warning:
        warnings.append(f"heavy tail: excess kurtosis {kurtosis:.3g}")
    positive = [w for w in scaled_widths if w > 0]
    if len(positive) >= 2 and positive[-1] > sampling.shrink_warning_ratio * positive[0]:
        warnings.append(
            "heavy tail: half-width shrinking slower than 1/sqrt(samples) "
            f"(ratio {positive[-1] / positive[0]:.3g})"
        )
    if expect_real and moments.count > 1:
        se_im = moments.std_error_im
        if se_im > 0 and abs(moments.mean_im) > 3.0 * se_im:
            warnings.append(
                f"imaginary residual: mean imaginary part {moments.mean_im:.3g} "
                f"exceeds 3 standard errors ({se_im:.3g})"
            )
    return warnings


def run_until(
    streams: EstimatorStream | Sequence[EstimatorStream],
    rule: StopRule,
    workers: int = 1,
) -> RunOutcome:
    """Draw blocks until the stopping rule fires.

    Blocks are taken round-robin: block r of stream 0, block r of stream 1,
    and so on. The rule is checked after each block (every block_size
    samples), and the last block is truncated to respect max_samples. The
    result depends only on the streams and the rule, never on ``workers``.
    """
    if isinstance(streams, EstimatorStream):
        streams = [streams]
    if not streams:
        raise ParameterError("run_until needs at least one stream")
    expect_real = all(s.estimator.matrix.is_real for s in streams)

    moments = RunningMoments()
    estimate: IntervalEstimate | None = None
    scaled_widths: list[float] = []
    checkpoints = 0
    cap = rule.max_samples
    if cap is None:
        cap = get_settings().sampling.epsilon_max_samples
    pool = ThreadPoolExecutor(max_workers=workers) if workers > 1 else None

    def draw(stream: EstimatorStream, index: int) -> np.ndarray:
        return stream.block(index)

    try:
        round_index = 0
        done = False
        while not done:
            if pool is not None:
                blocks = list(pool.map(draw, streams, [round_index] * len(streams)))
            else:
                blocks = [draw(stream, round_index) for stream in streams]
            for block in blocks:
                remaining = cap - moments.count
                if remaining < len(block):
                    block = block[:remaining]
                moments = moments.update_batch(block)
                checkpoints += 1
                if moments.count >= 2:
                    estimate = interval(moments, rule.confidence)
                    scaled_widths.append(estimate.half_width * math.sqrt(moments.count))
                if _met(estimate, rule.epsilon):
                    logger.debug("checkpoint %d: target met at %d", checkpoints, moments.count)
                    done = True
                    break
                if moments.count >= cap:
                    logger.debug("checkpoint %d: cap reached at %d", checkpoints, moments.count)
                    done = True
                    break
            round_index += 1
    finally:
        if pool is not None:
            pool.shutdown()

    target_met = _met(estimate, rule.epsilon) if rule.epsilon is not None else True
    warnings = _diagnose(moments, scaled_widths, expect_real)
    if not target_met:
        warnings.append(f"{TARGET_NOT_MET}: max_samples {cap} reached")
    logger.info(
        "run_until: %d samples over %d checkpoints, target %s",
        moments.count, checkpoints, "met" if target_met else "not met",
    )
    return RunOutcome(
        moments=moments,
        interval=estimate,
        target_met=target_met,
        checkpoints=checkpoints,
        warnings=warnings,
    )

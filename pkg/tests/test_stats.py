"""Unit tests for streaming moments, intervals and the sequential stopping rule."""

import math

import numpy as np
import pytest

from permlab.config import SamplingConfig, Settings, configure
from permlab.errors import InsufficientDataError, NonFiniteError, ParameterError
from permlab.estimators.discrete import (
    CustomSchemeEstimator,
    GaugeEstimator,
    GodsilGutmanEstimator,
)
from permlab.estimators.streams import EstimatorStream
from permlab.models.matrix import Matrix, nonzeros
from permlab.models.scheme import Channel, DecouplingScheme
from permlab.stats import RunningMoments, StopRule, interval, merge, run_until, update, z_value


@pytest.fixture
def exact_stream(ones2: Matrix) -> EstimatorStream:
    """A stream whose every sample is exactly 2."""
    scheme = DecouplingScheme.uniform(nonzeros(ones2), Channel.SIGN, fixed={(0, 1): 1j})
    return EstimatorStream(CustomSchemeEstimator(ones2, scheme), seed=1, block_size=512)


@pytest.fixture
def gg_stream(ones2: Matrix) -> EstimatorStream:
    """Godsil-Gutman samples on J₂ (values 0 and 4)."""
    return EstimatorStream(GodsilGutmanEstimator(ones2), seed=2, block_size=256)


class TestMoments:
    """Tests for RunningMoments."""

    def test_constant_stream(self) -> None:
        """Test (2, 2, 2) has mean 2 and variance 0."""
        acc = RunningMoments.from_samples([2, 2, 2])
        assert acc.mean == 2
        assert acc.variance == 0
        assert acc.excess_kurtosis == 0

    def test_two_values(self) -> None:
        """Test (0, 4) has mean 2 and variance 8."""
        acc = update(update(RunningMoments(), 0), 4)
        assert acc.mean == 2
        assert acc.variance == pytest.approx(8)

    def test_complex_variance(self) -> None:
        """Test real and imaginary spreads add."""
        acc = RunningMoments.from_samples([1j, -1j, 1, -1])
        assert acc.mean == 0
        assert acc.variance_re == pytest.approx(2 / 3)
        assert acc.variance_im == pytest.approx(2 / 3)
        assert acc.variance == pytest.approx(4 / 3)

    def test_merge_matches_single_pass(self, rng: np.random.Generator) -> None:
        """Test that merging halves equals accumulating everything."""
        samples = rng.standard_normal(1000) + 1j * rng.standard_normal(1000)
        whole = RunningMoments.from_samples(samples)
        merged = merge(
            RunningMoments.from_samples(samples[:377]), RunningMoments.from_samples(samples[377:])
        )
        assert merged.count == whole.count
        assert merged.mean == pytest.approx(whole.mean, rel=1e-12)
        assert merged.variance == pytest.approx(whole.variance, rel=1e-10)
        assert merged.excess_kurtosis == pytest.approx(whole.excess_kurtosis, rel=1e-9)
        assert merged.m3_re == pytest.approx(whole.m3_re, rel=1e-8, abs=1e-9)
        assert merged.max_abs == whole.max_abs

    def test_update_batch_matches_single_updates(self) -> None:
        """Test folding a batch equals folding its samples one by one."""
        samples = [1.0, 3.0, -2.0, 4.5, 0.5j]
        single = RunningMoments()
        for x in samples:
            single = update(single, x)
        batched = RunningMoments.from_samples([1.0]).update_batch(samples[1:])
        assert batched.count == single.count
        assert batched.mean == pytest.approx(single.mean)
        assert batched.variance == pytest.approx(single.variance)

    def test_merge_commutes(self, rng: np.random.Generator) -> None:
        """Test merge order does not matter beyond roundoff."""
        a = RunningMoments.from_samples(rng.exponential(size=50))
        b = RunningMoments.from_samples(rng.exponential(size=80))
        ab, ba = merge(a, b), merge(b, a)
        assert ab.mean == pytest.approx(ba.mean, rel=1e-14)
        assert ab.variance == pytest.approx(ba.variance, rel=1e-12)

    def test_merge_with_empty(self) -> None:
        """Test the empty accumulator is the identity."""
        acc = RunningMoments.from_samples([1, 2, 3])
        assert merge(acc, RunningMoments()) == acc
        assert merge(RunningMoments(), acc) == acc

    def test_non_finite_sample(self) -> None:
        """Test NaN samples are refused."""
        with pytest.raises(NonFiniteError, match="finite"):
            update(RunningMoments(), complex(float("nan"), 0))

    def test_kurtosis_of_heavy_tail(self) -> None:
        """Test a single outlier among constants has large kurtosis."""
        acc = RunningMoments.from_samples([0.0] * 999 + [1000.0])
        assert acc.excess_kurtosis > 100


class TestInterval:
    """Tests for normal-approximation intervals."""

    def test_constant_stream_has_zero_width(self) -> None:
        """Test a zero-variance stream."""
        estimate = interval(RunningMoments.from_samples([2.0] * 10))
        assert estimate.half_width == 0
        assert estimate.relative_half_width == 0
        assert estimate.contains(2.0)

    def test_half_width(self) -> None:
        """Test half-width = z · sd / √n."""
        acc = RunningMoments.from_samples([0, 4, 0, 4])
        estimate = interval(acc, 0.95)
        expected = z_value(0.95) * math.sqrt(acc.variance_re / 4)
        assert estimate.half_width == pytest.approx(expected)
        assert estimate.lower == pytest.approx(2 - expected)
        assert estimate.samples_used == 4

    def test_z_value(self) -> None:
        """Test the 95% quantile."""
        assert z_value(0.95) == pytest.approx(1.959964, abs=1e-6)

    def test_too_few_samples(self) -> None:
        """Test one sample is not enough."""
        with pytest.raises(InsufficientDataError, match="at least 2"):
            interval(RunningMoments.from_samples([1.0]))

    def test_bad_confidence(self) -> None:
        """Test confidence outside (0, 1)."""
        with pytest.raises(ParameterError, match="confidence"):
            interval(RunningMoments.from_samples([1.0, 2.0]), 1.0)

    def test_zero_point_relative_width(self) -> None:
        """Test a zero mean with spread has infinite relative width."""
        assert interval(RunningMoments.from_samples([-1.0, 1.0])).relative_half_width == math.inf


class TestStopRule:
    """Tests for StopRule validation."""

    def test_needs_a_limit(self) -> None:
        """Test a rule without cap or target."""
        with pytest.raises(ParameterError, match="max_samples or epsilon"):
            StopRule()

    @pytest.mark.parametrize(
        ("kwargs", "message"),
        [
            ({"max_samples": 0}, "max_samples"),
            ({"epsilon": 0.0}, "epsilon"),
            ({"epsilon": 0.1, "confidence": 0.0}, "confidence"),
        ],
    )
    def test_invalid(self, kwargs: dict, message: str) -> None:
        """Test out-of-range fields."""
        with pytest.raises(ParameterError, match=message):
            StopRule(**kwargs)


class TestRunUntil:
    """Tests for checkpointed sequential sampling."""

    def test_zero_variance_stops_at_first_checkpoint(self, exact_stream) -> None:
        """Test an exact estimator meets any target immediately."""
        outcome = run_until(exact_stream, StopRule(epsilon=0.001))
        assert outcome.target_met
        assert outcome.checkpoints == 1
        assert outcome.moments.count == 512
        assert outcome.interval.point == 2
        assert outcome.interval.half_width == 0
        assert outcome.warnings == []

    def test_epsilon_target(self, gg_stream) -> None:
        """Test a 5% target on J₂."""
        outcome = run_until(gg_stream, StopRule(epsilon=0.05))
        assert outcome.target_met
        assert outcome.interval.relative_half_width <= 0.05
        assert 1.8 <= outcome.moments.mean.real <= 2.2
        assert outcome.moments.count % 256 == 0

    def test_cap_truncates_last_block(self, gg_stream) -> None:
        """Test max_samples is honored exactly."""
        outcome = run_until(gg_stream, StopRule(max_samples=1000))
        assert outcome.moments.count == 1000
        assert outcome.target_met
        assert outcome.checkpoints == 4

    def test_target_not_met(self, gg_stream) -> None:
        """Test hitting the cap before the target."""
        outcome = run_until(gg_stream, StopRule(max_samples=1000, epsilon=1e-6))
        assert not outcome.target_met
        assert outcome.moments.count == 1000
        assert "target not met: max_samples 1000 reached" in outcome.warnings

    def test_zero_permanent_with_epsilon_only_terminates(self) -> None:
        """Test a relative target on per A = 0 stops at the epsilon sample cap."""
        configure(Settings(sampling=SamplingConfig(epsilon_max_samples=20_000)))
        matrix = Matrix.from_rows([[1, 2], [1, -2]])
        stream = EstimatorStream(GaugeEstimator(matrix, 2), seed=3)
        outcome = run_until(stream, StopRule(epsilon=0.05))
        assert not outcome.target_met
        assert outcome.moments.count == 20_000
        assert "target not met: max_samples 20000 reached" in outcome.warnings
        assert abs(outcome.moments.mean) < 0.1

    def test_workers_do_not_change_result(self, gg_stream) -> None:
        """Test threading leaves the result bit-identical."""
        streams = gg_stream.partition(4)
        rule = StopRule(max_samples=5000, epsilon=0.01)
        serial = run_until(streams, rule, workers=1)
        threaded = run_until(streams, rule, workers=4)
        assert serial.moments == threaded.moments
        assert serial.checkpoints == threaded.checkpoints

    def test_reproducible(self, gg_stream) -> None:
        """Test the same stream gives the same outcome."""
        rule = StopRule(max_samples=2000)
        assert run_until(gg_stream, rule).moments == run_until(gg_stream, rule).moments

    def test_no_streams(self) -> None:
        """Test an empty stream list."""
        with pytest.raises(ParameterError, match="at least one stream"):
            run_until([], StopRule(max_samples=10))

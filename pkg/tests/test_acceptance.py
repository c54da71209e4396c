"""End-to-end accuracy checks across the exact algorithms and the estimators.

The sampled checks use fixed seeds; the long ones carry the ``slow`` marker
(deselect with ``pytest -m "not slow"``).
"""

import itertools
import math
import time

import numpy as np
import pytest

from permlab.estimators import (
    LuEstimator,
    SvdEstimator,
    enumerate_estimator,
    enumerate_expectation,
)
from permlab.estimators.discrete import GaugeEstimator, KkllEstimator
from permlab.estimators.interface import DiscreteEstimator
from permlab.estimators.streams import EstimatorStream
from permlab.exact import (
    per_gauge_z2_full,
    per_gauge_zp_full,
    per_glynn,
    per_naive,
    per_ryser,
)
from permlab.models.matrix import Matrix
from permlab.stats import RunningMoments, interval

ORACLE_CASES = 100

DISCRETE_SCHEMES = [
    ("gg", {}),
    ("kkll", {"p": 3}),
    ("pairing", {"p": 2}),
    ("gauge", {"p": 2}),
    ("gauge", {"p": 3}),
    ("recursive", {}),
]

TWO_BY_TWO = [
    Matrix(np.array(entries, dtype=float).reshape(2, 2))
    for entries in itertools.product((0, 1, 2), repeat=4)
]


def _sparse_zero_one(count: int, max_ones: int, seed: int) -> list[Matrix]:
    """`count` distinct 3×3 0-1 matrices with at most `max_ones` ones."""
    patterns = [
        bits for bits in itertools.product((0, 1), repeat=9) if 0 < sum(bits) <= max_ones
    ]
    picks = np.random.default_rng(seed).choice(len(patterns), size=count, replace=False)
    return [Matrix(np.array(patterns[k], dtype=float).reshape(3, 3)) for k in picks]


THREE_BY_THREE = _sparse_zero_one(10, 7, seed=31)


class TestOracleEquivalence:
    """Every exact algorithm against the permutation sum."""

    @pytest.mark.slow
    @pytest.mark.parametrize("n", range(2, 9))
    def test_random_matrices(self, n: int) -> None:
        """Test 100 random matrices of each size agree to 1e-9 relative."""
        rng = np.random.default_rng(1000 + n)
        algorithms = {
            "ryser": per_ryser,
            "glynn": per_glynn,
            "gauge-sign": per_gauge_z2_full,
            **{f"gauge-z{p}": (lambda m, p=p: per_gauge_zp_full(m, p)) for p in (2, 3, 4)},
        }
        for case in range(ORACLE_CASES):
            matrix = Matrix(rng.uniform(-1, 1, size=(n, n)))
            expected = per_naive(matrix).complex_value
            scale = max(1.0, abs(expected))
            for name, algorithm in algorithms.items():
                value = algorithm(matrix).complex_value
                assert abs(value - expected) <= 1e-9 * scale, f"{name} case {case}"

    @pytest.mark.slow
    def test_glynn_all_ones_twenty(self) -> None:
        """Test Glynn on J₂₀ gives 20! within a ten-second budget."""
        started = time.perf_counter()
        result = per_glynn(Matrix.ones(20))
        elapsed = time.perf_counter() - started
        assert result.complex_value.real == pytest.approx(math.factorial(20), rel=1e-12)
        assert result.complex_value.imag == 0
        assert elapsed < 10.0


class TestUnbiasedness:
    """Enumerated estimator means equal the permanent on whole corpora."""

    @pytest.mark.parametrize(("tag", "options"), DISCRETE_SCHEMES)
    def test_two_by_two_corpus(self, tag: str, options: dict) -> None:
        """Test all 81 matrices with entries in {0, 1, 2}."""
        for matrix in TWO_BY_TWO:
            expected = per_naive(matrix).complex_value
            result = enumerate_expectation(matrix, tag, **options)
            assert result.mean == pytest.approx(expected, abs=1e-9), matrix.data.tolist()

    @pytest.mark.parametrize(("tag", "options"), DISCRETE_SCHEMES)
    def test_sparse_three_by_three(self, tag: str, options: dict) -> None:
        """Test ten 3×3 0-1 matrices with at most seven nonzeros."""
        for matrix in THREE_BY_THREE:
            expected = per_naive(matrix).complex_value
            result = enumerate_expectation(matrix, tag, **options)
            assert result.mean == pytest.approx(expected, abs=1e-9), matrix.data.tolist()

    def test_sparse_corpus_is_distinct(self) -> None:
        """Test the 3×3 corpus holds ten different matrices within the size bound."""
        assert len({m.data.tobytes() for m in THREE_BY_THREE}) == 10
        assert all(1 <= np.count_nonzero(m.data) <= 7 for m in THREE_BY_THREE)


class TestGaussianIntervals:
    """Gaussian-integral estimators cover the permanent at a million samples."""

    CASES = [
        Matrix.from_rows([[1, 2], [0, 1]]),
        Matrix.from_rows([[2, 1], [1, 2]]),
        Matrix.from_rows([[0, 1], [1, 0]]),
        Matrix.from_rows([[2, 2], [1, 0]]),
        Matrix.from_rows([[1, 0], [2, 2]]),
        Matrix.ones(2),
        Matrix(np.outer([1.0, 2.0, 3.0], [0.5, 1.0, 1.5])),
    ]

    @pytest.mark.slow
    @pytest.mark.parametrize("estimator_type", [LuEstimator, SvdEstimator])
    @pytest.mark.parametrize("case", range(len(CASES)))
    def test_interval_contains_permanent(self, estimator_type: type, case: int) -> None:
        """Test the 99.9% interval from 10⁶ samples contains per A."""
        matrix = self.CASES[case]
        stream = EstimatorStream(estimator_type(matrix), seed=400 + case)
        acc = RunningMoments.from_samples(stream.take(1_000_000))
        estimate = interval(acc, 0.999)
        assert estimate.contains(per_naive(matrix).complex_value.real)

    def test_rank_one_permanent(self) -> None:
        """Test per(uvᵀ) = n! Πu Πv for the rank-1 case."""
        matrix = self.CASES[-1]
        assert per_naive(matrix).complex_value == pytest.approx(6 * 6.0 * 0.75)


class TestSampledStatistics:
    """Sampled moments against enumerated ones."""

    @pytest.mark.parametrize(
        ("estimator_type", "rows"),
        [
            (KkllEstimator, [[1, 1], [1, 1]]),
            (GaugeEstimator, [[1, 2, 0], [0.5, 1, 1], [2, 0, 1]]),
        ],
        ids=["kkll-ones", "gauge-3x3"],
    )
    def test_variance_within_five_percent(
        self, estimator_type: type[DiscreteEstimator], rows: list[list[float]]
    ) -> None:
        """Test the sample variance of 400000 draws is within 5% of the enumerated one."""
        estimator = estimator_type(Matrix.from_rows(rows), p=3)
        exact = enumerate_estimator(estimator)
        acc = RunningMoments.from_samples(EstimatorStream(estimator, seed=77).take(400_000))
        assert acc.variance == pytest.approx(exact.variance, rel=0.05)

    def test_interval_coverage(self) -> None:
        """Test 95% intervals over 200 seeds cover per J₂ close to 95% of the time."""
        estimator = KkllEstimator(Matrix.ones(2), p=3)
        runs = 200
        covered = 0
        for seed in range(runs):
            acc = RunningMoments.from_samples(EstimatorStream(estimator, seed=seed).take(2000))
            covered += interval(acc, 0.95).contains(2.0)
        assert 0.90 <= covered / runs <= 0.995

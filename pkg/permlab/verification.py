"""Self-verification suite behind ``perm verify``.

Runs the symbolic identity checks and the exact-oracle equivalence checks
and reports one named outcome per identity.
"""

import itertools
import logging
from dataclasses import dataclass, field
from typing import Callable, Iterable

import numpy as np

from permlab.estimators.enumeration import enumerate_expectation
from permlab.exact.gauge import GaugeZ2Permanent, GaugeZpPermanent
from permlab.exact.glynn import GlynnPermanent
from permlab.exact.interface import PermanentAlgorithm
from permlab.exact.naive import per_naive
from permlab.exact.ryser import RyserPermanent
from permlab.grassmann.identities import HsChannel, verify_hs_identity
from permlab.grassmann.zeon import (
    berezin_top_coefficient,
    zeon_exp_quadratic,
    zeon_product_form,
)
from permlab.models.matrix import Matrix

logger = logging.getLogger(__name__)

EXACT_TOLERANCE = 1e-9
GAUSSIAN_TOLERANCE = 1e-10
PRODUCT_FORM_TOLERANCE = 1e-12


@dataclass(frozen=True)
class IdentityOutcome:
    """Result of one named identity over all of its cases."""

    name: str
    passed: bool
    cases: int
    residual: float
    detail: str = ""

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "cases": self.cases,
            "residual": self.residual,
            "detail": self.detail,
        }


@dataclass
class VerificationReport:
    """All outcomes of one verification run."""

    outcomes: list[IdentityOutcome] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(o.passed for o in self.outcomes)

    @property
    def failures(self) -> list[str]:
        return [o.name for o in self.outcomes if not o.passed]


def _relative(value: complex, expected: complex, scale: float) -> float:
    return abs(value - expected) / max(scale, 1e-300)


def _random_matrices(rng: np.random.Generator, n: int, count: int) -> list[Matrix]:
    return [Matrix(rng.uniform(-1.0, 1.0, size=(n, n))) for _ in range(count)]


def _outcome(
    name: str, residuals: Iterable[float], tolerance: float, detail: str = "", holds: bool = True
) -> IdentityOutcome:
    values = list(residuals)
    worst = max(values, default=0.0)
    outcome = IdentityOutcome(
        name=name,
        passed=holds and worst <= tolerance,
        cases=len(values),
        residual=worst,
        detail=detail,
    )
    logger.info(
        "verify %s: %s over %d cases (residual %.2e)",
        name, "pass" if outcome.passed else "FAIL", outcome.cases, worst,
    )
    return outcome


def check_gaussian_integral(
    max_n: int, rng: np.random.Generator, random_count: int = 50
) -> IdentityOutcome:
    """Top zeon coefficient of exp(φ*Aφ) against the permutation-sum permanent."""
    matrices = [
        Matrix(np.array(entries, dtype=float).reshape(2, 2))
        for entries in itertools.product((-1, 0, 1, 2), repeat=4)
    ]
    for n in range(3, max_n + 1):
        matrices.extend(_random_matrices(rng, n, random_count))
    residuals = []
    for matrix in matrices:
        expected = per_naive(matrix).complex_value
        value = berezin_top_coefficient(zeon_exp_quadratic(matrix))
        residuals.append(_relative(value, expected, max(1.0, abs(expected))))
    top = berezin_top_coefficient(zeon_exp_quadratic(Matrix.ones(max_n)))
    return _outcome(
        "Grassmann Gaussian integral", residuals, GAUSSIAN_TOLERANCE,
        detail=f"per J{max_n} = {top.real:g}",
    )


def check_product_form(max_n: int, rng: np.random.Generator, count: int = 10) -> IdentityOutcome:
    residuals = []
    for n in range(1, max_n + 1):
        for matrix in _random_matrices(rng, n, count):
            exponential = zeon_exp_quadratic(matrix)
            residuals.append(exponential.max_difference(zeon_product_form(matrix)))
    return _outcome("zeon product form", residuals, PRODUCT_FORM_TOLERANCE)


def _random_couplings(rng: np.random.Generator, count: int) -> np.ndarray:
    radius = 10.0 * np.sqrt(rng.uniform(0.0, 1.0, count))
    angle = rng.uniform(0.0, 2 * np.pi, count)
    return radius * np.exp(1j * angle)


HS_IDENTITIES: dict[str, tuple[HsChannel, tuple[int, ...]]] = {
    "HS density ℤ₂ identity": (HsChannel.DENSITY_Z2, (2,)),
    "HS ℤₚ identity": (HsChannel.ZP, (2, 3, 4, 5)),
    "HS pairing ℤₚ identity": (HsChannel.PAIRING_ZP, (2, 3, 4, 5)),
    "HS composite zeon ℤ₂ identity": (HsChannel.ZEON_COMPOSITE_Z2, (2,)),
    "measure factorization": (HsChannel.MEASURE_FACTORIZATION, (2,)),
}


def check_hs_identity(
    name: str, rng: np.random.Generator, trials: int = 100
) -> IdentityOutcome:
    """One named HS identity over random couplings, every p and both square-root branches."""
    channel, orders = HS_IDENTITIES[name]
    couplings = np.concatenate([[0.0, 2.5, 1.0], _random_couplings(rng, trials)])
    residuals = []
    holds = True
    for a, p, branch in itertools.product(couplings, orders, (1, -1)):
        check = verify_hs_identity(channel, complex(a), p=p, branch=branch)
        holds = holds and check.holds
        residuals.append(check.residual)
    return _outcome(name, residuals, float("inf"), holds=holds)


def _exact_algorithms() -> dict[str, Callable[[], PermanentAlgorithm]]:
    return {
        "ryser": lambda: RyserPermanent(workers=1),
        "glynn": lambda: GlynnPermanent(workers=1),
        "gauge-z2": lambda: GaugeZ2Permanent(workers=1),
        "gauge-zp p=2": lambda: GaugeZpPermanent(2, workers=1),
        "gauge-zp p=3": lambda: GaugeZpPermanent(3, workers=1),
        "gauge-zp p=4": lambda: GaugeZpPermanent(4, workers=1),
    }


def check_exact_equivalence(
    rng: np.random.Generator, max_n: int = 6, count: int = 10
) -> IdentityOutcome:
    """Every exact algorithm against the permutation sum, relative to per |A|."""
    algorithms = {name: factory() for name, factory in _exact_algorithms().items()}
    residuals = []
    for n in range(2, max_n + 1):
        for matrix in _random_matrices(rng, n, count):
            expected = per_naive(matrix).complex_value
            scale = per_naive(Matrix(np.abs(matrix.data))).complex_value.real
            for algorithm in algorithms.values():
                value = algorithm.compute(matrix).complex_value
                residuals.append(_relative(value, expected, scale))
    return _outcome("exact oracle equivalence", residuals, EXACT_TOLERANCE)


UNBIASEDNESS_CASES: tuple[tuple[str, dict], ...] = (
    ("gg", {}),
    ("kkll", {"p": 3}),
    ("pairing", {"p": 2}),
    ("gauge", {"p": 2}),
    ("gauge", {"p": 3}),
    ("recursive", {}),
)


def check_unbiasedness() -> IdentityOutcome:
    """Enumerated estimator means against the permutation sum on small 0-1-2 matrices."""
    matrices = [
        Matrix.ones(2),
        Matrix.from_rows([[1, 2], [0, 1]]),
        Matrix.from_rows([[2, 1], [1, 0]]),
        Matrix.from_rows([[1, 1, 0], [0, 1, 1], [1, 0, 1]]),
    ]
    residuals = []
    for matrix in matrices:
        expected = per_naive(matrix).complex_value
        for tag, options in UNBIASEDNESS_CASES:
            mean = enumerate_expectation(matrix, tag, **options).mean
            residuals.append(_relative(mean, expected, max(1.0, abs(expected))))
    return _outcome("estimator unbiasedness", residuals, EXACT_TOLERANCE)


def run_verification(max_n: int = 4, seed: int = 12345, trials: int = 100) -> VerificationReport:
    """Run every identity check.

    Args:
        max_n: Largest size for the Grassmann integral check (at most 4 unless overridden)
        seed: Seed for the random matrices and couplings
        trials: Random couplings per HS identity
    """
    rng = np.random.default_rng(seed)
    report = VerificationReport()
    report.outcomes.append(check_gaussian_integral(max_n, rng))
    report.outcomes.append(check_product_form(max_n, rng))
    for name in HS_IDENTITIES:
        report.outcomes.append(check_hs_identity(name, rng, trials))
    report.outcomes.append(check_exact_equivalence(rng))
    report.outcomes.append(check_unbiasedness())
    return report

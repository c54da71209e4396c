"""Exact mean and second moment of a discrete estimator by full enumeration."""

import logging
import math
from typing import Any

import numpy as np

from permlab.config import get_settings
from permlab.errors import ParameterError
from permlab.estimators.interface import DiscreteEstimator, Estimator, EstimatorTag
from permlab.estimators.registry import get_estimator_registry
from permlab.models.matrix import Matrix
from permlab.models.results import EnumerationResult

logger = logging.getLogger(__name__)

# Matrix cells materialized per evaluate_batch call
_CHUNK_CELLS = 2**20


def configuration_block(radices: tuple[int, ...], start: int, stop: int) -> np.ndarray:
    """Configurations with mixed-radix indices [start, stop), last variable fastest."""
    index = np.arange(start, stop, dtype=np.int64)
    configs = np.empty((index.size, len(radices)), dtype=np.int64)
    for k in range(len(radices) - 1, -1, -1):
        index, configs[:, k] = np.divmod(index, radices[k])
    return configs


def enumerate_estimator(estimator: Estimator) -> EnumerationResult:
    """Average the estimator and its squared magnitude over every configuration.

    Raises:
        ParameterError: If the estimator has no finite configuration space
        SizeGuardError: If the space exceeds the enumeration guard
    """
    if not isinstance(estimator, DiscreteEstimator):
        raise ParameterError(f"{estimator.tag.value} has no finite configuration space")
    size = estimator.config_space_size
    guards = get_settings().guards
    guards.check(
        "configuration space", size, guards.enumeration_max_configs,
        hint="use estimate to sample instead",
    )

    chunk = max(1, _CHUNK_CELLS // max(1, estimator.n * estimator.n))
    re_parts: list[float] = []
    im_parts: list[float] = []
    square_parts: list[float] = []
    for start in range(0, size, chunk):
        values = estimator.evaluate_batch(
            configuration_block(estimator.radices, start, min(size, start + chunk))
        )
        re_parts.append(math.fsum(values.real.tolist()))
        im_parts.append(math.fsum(values.imag.tolist()))
        square_parts.append(math.fsum((np.abs(values) ** 2).tolist()))

    mean = complex(math.fsum(re_parts) / size, math.fsum(im_parts) / size)
    second_moment = math.fsum(square_parts) / size
    logger.debug("enumerated %s over %d configurations", estimator.tag.value, size)
    return EnumerationResult(
        estimator=estimator.tag.value,
        mean=mean,
        second_moment=second_moment,
        config_space_size=size,
        parameters=estimator.parameters,
    )


def enumerate_expectation(
    matrix: Matrix, tag: EstimatorTag | str, **options: Any
) -> EnumerationResult:
    """Exact mean, second absolute moment and space size of a tagged estimator.

    ``options`` are passed to the estimator registry (p, scheme, depth).
    """
    estimator = get_estimator_registry().create(tag, matrix, **options)
    return enumerate_estimator(estimator)

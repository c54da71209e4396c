"""Permanent by its defining sum over permutations (the project-wide oracle)."""

import itertools
import math

import numpy as np

from permlab.config import get_settings
from permlab.exact.interface import PermanentAlgorithm
from permlab.models.matrix import Matrix
from permlab.models.results import ExactAlgorithm, ExactResult
from permlab.models.scaled import ScaledValue

_CHUNK = 40_320  # 8!


class NaivePermanent(PermanentAlgorithm):
    """Σ_P Π_i A_{i,P(i)} over all permutations in lexicographic order."""

    @property
    def algorithm(self) -> ExactAlgorithm:
        return ExactAlgorithm.NAIVE

    def guard(self, n: int) -> None:
        guards = get_settings().guards
        guards.check("naive n", n, guards.naive_max_n)

    def _compute(self, matrix: Matrix, n: int) -> ExactResult:
        data = matrix.data
        real = matrix.is_real
        if real:
            data = data.real
        rows = np.arange(n)
        permutations = itertools.permutations(range(n))
        re_parts: list[float] = []
        im_parts: list[float] = []
        while True:
            chunk = list(itertools.islice(permutations, _CHUNK))
            if not chunk:
                break
            products = np.prod(data[rows, np.asarray(chunk)], axis=1)
            re_parts.extend(np.real(products).tolist())
            if not real:
                im_parts.extend(np.imag(products).tolist())
        value = complex(math.fsum(re_parts), math.fsum(im_parts))
        return ExactResult(
            value=ScaledValue.from_complex(value),
            terms_evaluated=math.factorial(n),
            algorithm=self.algorithm,
        )


def per_naive(matrix: Matrix) -> ExactResult:
    """Permanent by lexicographic permutation enumeration; n ≤ 12 unless overridden."""
    return NaivePermanent().compute(matrix)

"""Block Gray-code kernel for exponential column-sum formulas.

Ryser, Glynn and the gauge sums all have the shape

    Σ_x  (Π_j w_j(x_j)) · Π_i (Σ_j A_ij x_j)

where each column j picks x_j from a small alphabet. The trailing columns
form a dense inner block whose row-sum contributions are precomputed once;
the leading columns are walked in reflected Gray order so each outer step
changes one x_j and updates the n outer row sums in O(n). The row sums are
recomputed from scratch at every multiple of RESEED_INTERVAL outer steps and
worker ranges start on those multiples, so each outer step sees the same
floating-point row sums whatever the worker count. Block sums are accumulated
with math.fsum, so merging worker partials in any order gives the correctly
rounded total.
"""

import itertools
import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from permlab.errors import VerificationError
from permlab.exact.gray import GrayCounter

logger = logging.getLogger(__name__)

DRIFT_TOLERANCE = 1e-9
RESEED_INTERVAL = 256  # outer steps between full row-sum recomputations


@dataclass(frozen=True, eq=False)
class ColumnAlphabet:
    """Choices x for one column and their weights w(x)."""

    values: np.ndarray
    weights: np.ndarray

    def __post_init__(self) -> None:
        """Validate matching lengths."""
        if len(self.values) != len(self.weights) or len(self.values) == 0:
            raise ValueError("alphabet values and weights must be non-empty and equal length")

    @property
    def radix(self) -> int:
        return len(self.values)

    @property
    def is_real(self) -> bool:
        return not (np.any(np.imag(self.values)) or np.any(np.imag(self.weights)))


@dataclass
class KernelSum:
    """Raw kernel output before normalization."""

    total: complex
    terms: int
    outer_steps: int
    drift_checks: int = 0


def _inner_block(
    matrix: np.ndarray, alphabets: Sequence[ColumnAlphabet], dtype: type
) -> tuple[np.ndarray, np.ndarray]:
    """Row sums (K × n) and weights (K,) for every assignment of the inner columns."""
    n_rows = matrix.shape[0]
    if not alphabets:
        return np.zeros((1, n_rows), dtype=dtype), np.ones(1, dtype=dtype)
    grids = list(itertools.product(*(range(a.radix) for a in alphabets)))
    digits = np.asarray(grids, dtype=np.intp)
    values = np.stack(
        [alphabets[c].values[digits[:, c]] for c in range(len(alphabets))], axis=1
    ).astype(dtype)
    weights = np.prod(
        np.stack([alphabets[c].weights[digits[:, c]] for c in range(len(alphabets))], axis=1),
        axis=1,
    ).astype(dtype)
    return values @ matrix.T, weights


def _split_columns(alphabets: Sequence[ColumnAlphabet], block_bits: int) -> int:
    """Index of the first inner column: trailing columns fit in 2**block_bits assignments."""
    budget = 2**block_bits
    size = 1
    first = len(alphabets)
    while first > 0 and size * alphabets[first - 1].radix <= budget:
        first -= 1
        size *= alphabets[first].radix
    return first


def _walk_range(
    outer_matrix: np.ndarray,
    alphabets: Sequence[ColumnAlphabet],
    inner_sums: np.ndarray,
    inner_weights: np.ndarray,
    start: int,
    stop: int,
    check_interval: int,
    dtype: type,
) -> tuple[list[complex], int]:
    """Sum the blocks for outer Gray indices [start, stop).

    `start` must be a multiple of RESEED_INTERVAL (or the sequence start).
    """
    radices = [a.radix for a in alphabets]
    counter = GrayCounter(radices, start)
    column_values = [a.values.astype(dtype) for a in alphabets]
    column_weights = [a.weights.astype(dtype) for a in alphabets]

    def fresh_sums() -> np.ndarray:
        x = np.array([column_values[c][d] for c, d in enumerate(counter.digits)], dtype=dtype)
        return outer_matrix @ x if len(x) else np.zeros(inner_sums.shape[1], dtype=dtype)

    row_sums = fresh_sums()
    partials: list[complex] = []
    checks = 0
    index = start
    while True:
        weight = math.prod(column_weights[c][d] for c, d in enumerate(counter.digits))
        terms = (weight * inner_weights) * np.prod(inner_sums + row_sums, axis=1)
        if np.iscomplexobj(terms):
            partials.append(
                complex(math.fsum(terms.real.tolist()), math.fsum(terms.imag.tolist()))
            )
        else:
            partials.append(complex(math.fsum(terms.tolist()), 0.0))

        index += 1
        if index >= stop:
            break
        step = counter.advance()
        if step is None:
            break
        column = step.position
        row_sums = row_sums + outer_matrix[:, column] * (
            column_values[column][step.new] - column_values[column][step.old]
        )
        if check_interval and index % check_interval == 0:
            checks += 1
            drift = float(np.abs(row_sums - fresh_sums()).max(initial=0.0))
            if drift > DRIFT_TOLERANCE:
                raise VerificationError(
                    f"Gray-code row sums drifted by {drift:.3e} at outer step {index}"
                )
        if index % RESEED_INTERVAL == 0:
            row_sums = fresh_sums()
    return partials, checks


def column_sum_kernel(
    matrix: np.ndarray,
    alphabets: Sequence[ColumnAlphabet],
    block_bits: int = 12,
    workers: int = 1,
    check_interval: int = 0,
) -> KernelSum:
    """Evaluate Σ_x (Π_j w_j(x_j)) Π_i (Σ_j A_ij x_j) over all assignments x."""
    n_rows, n_cols = matrix.shape
    if len(alphabets) != n_cols:
        raise ValueError("one alphabet per column is required")
    real = not np.iscomplexobj(matrix) or not np.any(np.imag(matrix))
    real = real and all(a.is_real for a in alphabets)
    dtype = np.float64 if real else np.complex128
    work = (np.real(matrix) if real else matrix).astype(dtype)

    first_inner = _split_columns(alphabets, block_bits)
    outer_alphabets = list(alphabets[:first_inner])
    inner_sums, inner_weights = _inner_block(work[:, first_inner:], alphabets[first_inner:], dtype)
    outer_matrix = work[:, :first_inner]

    outer_count = math.prod(a.radix for a in outer_alphabets)
    terms = outer_count * len(inner_weights)
    segments = -(-outer_count // RESEED_INTERVAL)
    workers = max(1, min(workers, segments))
    bounds = [
        min(outer_count, RESEED_INTERVAL * (segments * w // workers)) for w in range(workers + 1)
    ]
    ranges = [(bounds[w], bounds[w + 1]) for w in range(workers) if bounds[w] < bounds[w + 1]]

    def run(span: tuple[int, int]) -> tuple[list[complex], int]:
        return _walk_range(
            outer_matrix, outer_alphabets, inner_sums, inner_weights,
            span[0], span[1], check_interval, dtype,
        )

    if len(ranges) > 1:
        with ThreadPoolExecutor(max_workers=len(ranges)) as pool:
            results = list(pool.map(run, ranges))
    else:
        results = [run(span) for span in ranges]

    partials = [p for chunk, _ in results for p in chunk]
    checks = sum(c for _, c in results)
    total = complex(math.fsum(p.real for p in partials), math.fsum(p.imag for p in partials))
    logger.debug(
        "kernel: %d terms, %d outer steps in %d segments, %d inner, %d workers",
        terms, outer_count, segments, len(inner_weights), len(ranges),
    )
    return KernelSum(
        total=total,
        terms=terms,
        outer_steps=outer_count,
        drift_checks=checks,
    )

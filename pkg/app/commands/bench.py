"""``perm bench``: wall-clock timing of exact algorithms on random 0-1 matrices."""

import argparse
import logging
import statistics
import time

import numpy as np

from permlab.config import get_settings
from permlab.errors import ParameterError
from permlab.exact.registry import get_exact_registry
from permlab.models.matrix import Matrix

from app.commands.common import emit, save_json, timed
from app.reports import BenchRow, RunParameters, new_report

logger = logging.getLogger(__name__)


def parse_n_range(text: str) -> range:
    """``A..B`` as the inclusive range A..B."""
    low, sep, high = text.partition("..")
    try:
        if not sep:
            raise ValueError
        start, stop = int(low), int(high)
    except ValueError as e:
        raise ParameterError(f"--n-range must look like A..B, got {text!r}") from e
    if start < 1 or stop < start:
        raise ParameterError(f"--n-range needs 1 <= A <= B, got {text!r}")
    return range(start, stop + 1)


def random_01_matrix(n: int, rng: np.random.Generator) -> Matrix:
    return Matrix(rng.integers(0, 2, size=(n, n)).astype(float))


def bench_one(
    algorithm_tag: str,
    n: int,
    reps: int,
    seed: int,
    p: int | None = None,
    workers: int | None = None,
) -> BenchRow:
    """Median wall-clock time of ``reps`` computations at size n."""
    algorithm = get_exact_registry().create(algorithm_tag, p=p, workers=workers)
    matrix = random_01_matrix(n, np.random.default_rng([seed, n]))
    algorithm.guard(n)
    timings = []
    terms = 0
    for _ in range(reps):
        start = time.perf_counter()
        terms = algorithm.compute(matrix).terms_evaluated
        timings.append(time.perf_counter() - start)
    median = statistics.median(timings)
    logger.info("bench %s n=%d: median %.3f ms over %d reps", algorithm_tag, n, median * 1e3, reps)
    return BenchRow(
        algorithm=algorithm_tag,
        n=n,
        reps=reps,
        median_ms=median * 1e3,
        terms=terms,
        terms_per_sec=terms / median if median > 0 else 0.0,
    )


def cmd_bench(args: argparse.Namespace) -> int:
    """Time each listed algorithm over the size range."""
    algorithms = [tag.strip() for tag in args.alg.split(",") if tag.strip()]
    if not algorithms:
        raise ParameterError("--alg needs at least one algorithm")
    if args.reps < 1:
        raise ParameterError(f"--reps must be positive, got {args.reps}")
    sizes = parse_n_range(args.n_range)
    seed = args.seed if args.seed is not None else get_settings().sampling.default_seed

    with timed() as watch:
        rows = [
            bench_one(tag, n, args.reps, seed, args.p, args.workers)
            for tag in algorithms
            for n in sizes
        ]
    report = new_report(
        ",".join(algorithms),
        parameters=RunParameters(p=args.p, seed=seed, workers=args.workers),
        bench=rows,
        elapsed_ms=watch.elapsed_ms,
    )
    emit(report, args.output)
    if args.json:
        save_json(report, args.json)
    return 0

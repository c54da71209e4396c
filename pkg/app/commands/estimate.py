"""``perm estimate``: sample an estimator until a stopping rule fires."""

import argparse
import logging

import numpy as np

from permlab.config import get_settings
from permlab.errors import ParameterError
from permlab.estimators.registry import get_estimator_registry
from permlab.estimators.streams import EstimatorStream
from permlab.models.matrix import nonzeros
from permlab.stats.run_until import StopRule, run_until

from app.commands.common import emit, load_input, load_scheme, timed
from app.reports import ComplexValue, RunParameters, new_report

logger = logging.getLogger(__name__)


def parse_seed(value: str | None) -> int:
    """An explicit integer seed, the configured default, or fresh entropy for ``random``."""
    if value is None:
        return get_settings().sampling.default_seed
    if value == "random":
        return int(np.random.SeedSequence().entropy)
    try:
        seed = int(value)
    except ValueError as e:
        raise ParameterError(f"--seed must be an integer or 'random', got {value!r}") from e
    if seed < 0:
        raise ParameterError(f"--seed must be non-negative, got {seed}")
    return seed


def cmd_estimate(args: argparse.Namespace) -> int:
    """Run an estimator across seeded streams and report the interval."""
    settings = get_settings()
    matrix = load_input(args)
    scheme = load_scheme(args.scheme, nonzeros(matrix)) if args.scheme else None
    estimator = get_estimator_registry().create(
        args.alg, matrix, p=args.p, scheme=scheme, depth=args.recursion_depth
    )

    seed = parse_seed(args.seed)
    streams = args.streams if args.streams is not None else settings.workers
    if streams < 1:
        raise ParameterError(f"--streams must be positive, got {streams}")
    max_samples = args.samples
    if max_samples is None and args.epsilon is None:
        max_samples = settings.sampling.default_max_samples
    rule = StopRule(
        max_samples=max_samples,
        epsilon=args.epsilon,
        confidence=args.confidence
        if args.confidence is not None
        else settings.sampling.default_confidence,
    )

    root = EstimatorStream(estimator, seed, block_size=settings.sampling.checkpoint_interval)
    with timed() as watch:
        outcome = run_until(root.partition(streams), rule, workers=streams)
    logger.info(
        "%s: %d samples in %.3f ms", args.alg, outcome.moments.count, watch.elapsed_ms
    )

    estimate = outcome.interval
    parameters = estimator.parameters
    report = new_report(
        estimator.tag.value,
        version=estimator.algorithm_version,
        n=matrix.n_rows,
        m=nonzeros(matrix).m,
        parameters=RunParameters(
            p=parameters.get("p"),
            scheme=args.scheme,
            seed=seed,
            streams=streams,
            depth=parameters.get("depth"),
        ),
        result=ComplexValue.of(outcome.moments.mean),
        std_error=estimate.std_error if estimate is not None else None,
        interval=(estimate.lower, estimate.upper) if estimate is not None else None,
        samples=outcome.moments.count,
        elapsed_ms=watch.elapsed_ms,
        warnings=outcome.warnings,
    )
    emit(report, args.output)
    return 0

"""``perm exact``: one exact permanent."""

import argparse
import logging
import math

from permlab.exact.registry import get_exact_registry
from permlab.models.matrix import nonzeros

from app.commands.common import emit, load_input, timed
from app.reports import ComplexValue, RunParameters, RunReport, new_report

logger = logging.getLogger(__name__)


def cmd_exact(args: argparse.Namespace) -> int:
    """Compute per A with the chosen algorithm and report value, terms and timing."""
    matrix = load_input(args)
    algorithm = get_exact_registry().create(args.alg, p=args.p, workers=args.workers)
    with timed() as watch:
        result = algorithm.compute(matrix)
    logger.info("%s on n=%d: %.3f ms", args.alg, matrix.n_rows, watch.elapsed_ms)

    value = result.complex_value
    exponent = 0
    if not (math.isfinite(value.real) and math.isfinite(value.imag)):
        value, exponent = result.value.mantissa, result.value.exponent
    warnings = []
    if result.metadata.get("residual_flagged"):
        warnings.append(f"imaginary residual {result.imaginary_residual:.3g} dropped")

    report: RunReport = new_report(
        args.alg,
        version=algorithm.algorithm_version,
        n=matrix.n_rows,
        m=nonzeros(matrix).m,
        parameters=RunParameters(p=args.p, workers=algorithm.workers),
        result=ComplexValue.of(value),
        exponent=exponent,
        terms=result.terms_evaluated,
        elapsed_ms=watch.elapsed_ms,
        warnings=warnings,
    )
    emit(report, args.output)
    return 0

"""Helpers shared by the command handlers."""

import argparse
import logging
import time
from contextlib import contextmanager
from pathlib import Path
from typing import Iterator

from permlab.errors import ParameterError, ParseError
from permlab.linalg.io import read_matrix
from permlab.models.matrix import Matrix, NonzeroPattern
from permlab.models.scheme import DecouplingScheme, parse_scheme

from app.reports import RunReport

logger = logging.getLogger(__name__)


def load_input(args: argparse.Namespace) -> Matrix:
    if not args.input:
        raise ParameterError("--input is required")
    return read_matrix(args.input)


def load_scheme(path: str, pattern: NonzeroPattern) -> DecouplingScheme:
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e.strerror}") from e
    return parse_scheme(text, pattern)


def emit(report: RunReport, output: str) -> None:
    """Write the report to stdout in the requested format."""
    print(report.to_json() if output == "json" else report.to_text())


def save_json(report: RunReport, path: str) -> None:
    """Write the JSON report to a file."""
    try:
        Path(path).write_text(report.to_json() + "\n")
    except OSError as e:
        raise ParameterError(f"cannot write {path}: {e.strerror}") from e
    logger.info("report saved to %s", path)


class Stopwatch:
    """Elapsed wall-clock milliseconds of a ``timed()`` block."""

    elapsed_ms: float = 0.0


@contextmanager
def timed() -> Iterator[Stopwatch]:
    watch = Stopwatch()
    start = time.perf_counter()
    try:
        yield watch
    finally:
        watch.elapsed_ms = (time.perf_counter() - start) * 1000.0

"""``perm variance``: exact estimator statistics by enumeration."""

import argparse
from typing import Any

from permlab.errors import ParameterError
from permlab.estimators.enumeration import enumerate_expectation
from permlab.models.matrix import nonzeros

from app.commands.common import emit, load_input, load_scheme, timed
from app.reports import Comparison, ComplexValue, EnumerationStats, RunParameters, new_report

_INT_OPTIONS = {"p", "depth"}


def parse_compare(text: str) -> list[tuple[str, str, dict[str, Any]]]:
    """Split ``gauge:p=2,gauge:p=3`` into (label, tag, options) triples."""
    parsed = []
    for label in (item.strip() for item in text.split(",")):
        if not label:
            raise ParameterError(f"empty estimator in --compare {text!r}")
        tag, *settings = label.split(":")
        options: dict[str, Any] = {}
        for setting in settings:
            key, sep, value = setting.partition("=")
            if not sep or key not in _INT_OPTIONS:
                raise ParameterError(
                    f"bad option {setting!r} in --compare (use p=INT or depth=INT)"
                )
            try:
                options[key] = int(value)
            except ValueError as e:
                raise ParameterError(f"option {key} must be an integer, got {value!r}") from e
        parsed.append((label, tag, options))
    if len(parsed) < 2:
        raise ParameterError("--compare needs at least two estimators")
    return parsed


def cmd_variance(args: argparse.Namespace) -> int:
    """Enumerate one estimator, or compare the second moments of several."""
    matrix = load_input(args)
    scheme = load_scheme(args.scheme, nonzeros(matrix)) if args.scheme else None
    parameters = RunParameters(p=args.p, scheme=args.scheme)

    if args.compare:
        with timed() as watch:
            entries = [
                EnumerationStats.from_result(
                    label, enumerate_expectation(matrix, tag, scheme=scheme, **options)
                )
                for label, tag, options in parse_compare(args.compare)
            ]
        base = entries[0].second_moment
        if base == 0:
            raise ParameterError(f"{entries[0].label} has zero second moment; cannot form ratios")
        report = new_report(
            args.compare,
            n=matrix.n_rows,
            m=nonzeros(matrix).m,
            parameters=parameters,
            comparison=Comparison(
                entries=entries,
                second_moment_ratios=[e.second_moment / base for e in entries[1:]],
            ),
            elapsed_ms=watch.elapsed_ms,
        )
        emit(report, args.output)
        return 0

    if not args.alg:
        raise ParameterError("variance needs --alg or --compare")
    with timed() as watch:
        result = enumerate_expectation(
            matrix, args.alg, p=args.p, scheme=scheme, depth=args.recursion_depth
        )
    stats = EnumerationStats.from_result(args.alg, result)
    report = new_report(
        result.estimator,
        n=matrix.n_rows,
        m=nonzeros(matrix).m,
        parameters=RunParameters(
            p=result.parameters.get("p"),
            scheme=args.scheme,
            depth=result.parameters.get("depth"),
        ),
        result=ComplexValue.of(result.mean),
        terms=result.config_space_size,
        enumeration=stats,
        elapsed_ms=watch.elapsed_ms,
    )
    emit(report, args.output)
    return 0

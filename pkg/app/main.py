"""perm - permanent-lab command-line interface.

Commands:
    exact     exact permanent by naive, Ryser, Glynn or gauge sums
    estimate  unbiased estimator sampled until a stopping rule fires
    variance  exact estimator mean and second moment by enumeration
    verify    identity self-check suite
    bench     timing of exact algorithms

Every command prints a report on stdout (--output text|json). Errors print
one line ``error: <code>: <reason>`` on stderr and exit with the error's code.
"""

import argparse
import logging
import sys
from typing import Callable, Sequence

from permlab.config import configure, get_settings
from permlab.errors import PermanentLabError
from permlab.estimators.interface import EstimatorTag
from permlab.models.results import ExactAlgorithm

from app.commands import cmd_bench, cmd_estimate, cmd_exact, cmd_variance, cmd_verify

logger = logging.getLogger(__name__)

_LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"
_handler: logging.Handler | None = None


def configure_logging(level: str) -> None:
    """Install the single stderr handler on the root logger."""
    global _handler
    root = logging.getLogger()
    if _handler is not None:
        root.removeHandler(_handler)
    _handler = logging.StreamHandler(sys.stderr)
    _handler.setFormatter(logging.Formatter(_LOG_FORMAT))
    root.addHandler(_handler)
    root.setLevel(level.upper())


def _common_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--output",
        choices=["text", "json"],
        default="text",
        help="Report format (default: text)",
    )
    common.add_argument(
        "--log-level",
        default=None,
        help="Logging level for stderr (default: PERMLAB_LOG_LEVEL or WARNING)",
    )
    common.add_argument(
        "--override-size-guard",
        action="store_true",
        help="Run even when a size guard would refuse",
    )
    return common


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="perm",
        description="Exact algorithms and unbiased estimators for the matrix permanent",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog=__doc__,
    )
    common = _common_parser()
    subparsers = parser.add_subparsers(dest="command", help="Command to run")

    exact_parser = subparsers.add_parser("exact", parents=[common], help="Exact permanent")
    exact_parser.add_argument(
        "--alg", required=True, choices=[a.value for a in ExactAlgorithm], help="Algorithm"
    )
    exact_parser.add_argument("--p", type=int, default=None, help="Phase order for gauge-zp")
    exact_parser.add_argument("--input", required=True, help="Matrix file (text or JSON)")
    exact_parser.add_argument(
        "--workers", type=int, default=None, help="Threads for the Gray-code kernel"
    )

    estimator_tags = [t.value for t in EstimatorTag]
    estimate_parser = subparsers.add_parser(
        "estimate", parents=[common], help="Sample an unbiased estimator"
    )
    estimate_parser.add_argument("--alg", required=True, choices=estimator_tags)
    estimate_parser.add_argument("--p", type=int, default=None, help="Phase order")
    estimate_parser.add_argument("--scheme", default=None, help="Scheme JSON for --alg custom")
    estimate_parser.add_argument("--samples", type=int, default=None, help="Sample cap")
    estimate_parser.add_argument(
        "--epsilon", type=float, default=None, help="Target relative half-width"
    )
    estimate_parser.add_argument(
        "--confidence", type=float, default=None, help="Interval confidence (default: 0.95)"
    )
    estimate_parser.add_argument(
        "--seed", default=None, help="Integer seed, or 'random' for fresh entropy"
    )
    estimate_parser.add_argument(
        "--streams", type=int, default=None, help="Parallel sample streams (default: CPUs)"
    )
    estimate_parser.add_argument(
        "--recursion-depth", type=int, default=1, help="Depth of the recursive estimator"
    )
    estimate_parser.add_argument("--input", required=True, help="Matrix file (text or JSON)")

    variance_parser = subparsers.add_parser(
        "variance", parents=[common], help="Exact estimator statistics by enumeration"
    )
    variance_parser.add_argument("--alg", default=None, choices=estimator_tags)
    variance_parser.add_argument("--p", type=int, default=None, help="Phase order")
    variance_parser.add_argument("--scheme", default=None, help="Scheme JSON for custom")
    variance_parser.add_argument(
        "--recursion-depth", type=int, default=1, help="Depth of the recursive estimator"
    )
    variance_parser.add_argument(
        "--compare",
        default=None,
        help="Comma-separated estimators, e.g. gauge:p=2,gauge:p=3",
    )
    variance_parser.add_argument("--input", required=True, help="Matrix file (text or JSON)")

    verify_parser = subparsers.add_parser(
        "verify", parents=[common], help="Run the identity self-checks"
    )
    verify_parser.add_argument(
        "--max-n", type=int, default=4, help="Largest n for the Grassmann integral check"
    )
    verify_parser.add_argument("--seed", type=int, default=None, help="Seed for random cases")
    verify_parser.add_argument(
        "--trials", type=int, default=100, help="Random couplings per HS identity"
    )

    bench_parser = subparsers.add_parser(
        "bench", parents=[common], help="Time exact algorithms"
    )
    bench_parser.add_argument(
        "--alg", required=True, help="Comma-separated algorithms, e.g. ryser,glynn"
    )
    bench_parser.add_argument("--n-range", required=True, help="Sizes as A..B (inclusive)")
    bench_parser.add_argument("--reps", type=int, default=5, help="Repetitions per size")
    bench_parser.add_argument("--seed", type=int, default=None, help="Seed for the matrices")
    bench_parser.add_argument("--p", type=int, default=None, help="Phase order for gauge-zp")
    bench_parser.add_argument(
        "--workers", type=int, default=None, help="Threads for the Gray-code kernel"
    )
    bench_parser.add_argument(
        "--json",
        default=None,
        metavar="PATH",
        help="Also save the JSON report to PATH (stdout keeps --output)",
    )
    return parser


COMMANDS: dict[str, Callable[[argparse.Namespace], int]] = {
    "exact": cmd_exact,
    "estimate": cmd_estimate,
    "variance": cmd_variance,
    "verify": cmd_verify,
    "bench": cmd_bench,
}


def main(argv: Sequence[str] | None = None) -> int:
    """Main entry point"""
    parser = build_parser()
    args = parser.parse_args(argv)

    if not args.command:
        parser.print_help()
        return 1

    settings = get_settings()
    configure_logging(args.log_level or settings.log_level)
    if args.override_size_guard:
        configure(settings.with_guard_override(True))

    try:
        return COMMANDS[args.command](args)
    except PermanentLabError as e:
        logger.debug("%s failed", args.command, exc_info=True)
        print(f"error: {e.one_line()}", file=sys.stderr)
        return e.exit_code
    except KeyboardInterrupt:
        print("\nInterrupted by user", file=sys.stderr)
        return 130


if __name__ == "__main__":
    sys.exit(main())

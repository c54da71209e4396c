"""``perm verify``: the identity self-check suite."""

import argparse

from permlab.config import get_settings
from permlab.errors import VerificationError
from permlab.verification import run_verification

from app.commands.common import emit, timed
from app.reports import IdentityRow, RunParameters, new_report


def cmd_verify(args: argparse.Namespace) -> int:
    """Run every identity check; fail naming each identity that did not hold."""
    seed = args.seed if args.seed is not None else get_settings().sampling.default_seed
    with timed() as watch:
        verification = run_verification(max_n=args.max_n, seed=seed, trials=args.trials)
    report = new_report(
        "verify",
        n=args.max_n,
        parameters=RunParameters(seed=seed),
        identities=[IdentityRow.from_outcome(o) for o in verification.outcomes],
        elapsed_ms=watch.elapsed_ms,
    )
    emit(report, args.output)
    if not verification.passed:
        raise VerificationError("failing identities: " + ", ".join(verification.failures))
    return 0

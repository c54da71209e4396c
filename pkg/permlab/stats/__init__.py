"""Streaming moments, confidence intervals and sequential stopping."""

from permlab.stats.interval import IntervalEstimate, interval, z_value
from permlab.stats.moments import RunningMoments, merge, update
from permlab.stats.run_until import TARGET_NOT_MET, RunOutcome, StopRule, run_until

__all__ = [
    "IntervalEstimate",
    "RunOutcome",
    "RunningMoments",
    "StopRule",
    "TARGET_NOT_MET",
    "interval",
    "merge",
    "run_until",
    "update",
    "z_value",
]

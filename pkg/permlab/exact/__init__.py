"""Exact permanent algorithms."""

from permlab.exact.gauge import (
    GaugeZ2Permanent,
    GaugeZpPermanent,
    per_gauge_z2_full,
    per_gauge_zp_full,
)
from permlab.exact.glynn import GlynnPermanent, per_glynn, per_glynn_batch
from permlab.exact.gray import GrayCounter, gray_sequence, gray_state
from permlab.exact.interface import PermanentAlgorithm
from permlab.exact.kernel import ColumnAlphabet, KernelSum, column_sum_kernel
from permlab.exact.naive import NaivePermanent, per_naive
from permlab.exact.registry import ExactRegistry, get_exact_registry
from permlab.exact.ryser import RyserPermanent, per_ryser

__all__ = [
    # Interface
    "PermanentAlgorithm",
    "ExactRegistry",
    "get_exact_registry",
    # Algorithms
    "GaugeZ2Permanent",
    "GaugeZpPermanent",
    "GlynnPermanent",
    "NaivePermanent",
    "RyserPermanent",
    "per_gauge_z2_full",
    "per_gauge_zp_full",
    "per_glynn",
    "per_glynn_batch",
    "per_naive",
    "per_ryser",
    # Kernel
    "ColumnAlphabet",
    "GrayCounter",
    "KernelSum",
    "column_sum_kernel",
    "gray_sequence",
    "gray_state",
]

"""Run reports emitted by every ``perm`` command."""

import math
from typing import Any

from pydantic import BaseModel, ConfigDict, Field, model_validator

from permlab.config import get_settings
from permlab.models.results import EnumerationResult
from permlab.verification import IdentityOutcome

# --- Report parts ---


class ComplexValue(BaseModel):
    """A complex number as {re, im}."""

    re: float
    im: float = 0.0

    @classmethod
    def of(cls, value: complex) -> "ComplexValue":
        return cls(re=value.real, im=value.imag)


class RunParameters(BaseModel):
    """Parameters that, with the input matrix, determine a run."""

    p: int | None = None
    scheme: str | None = None
    seed: int | None = None
    streams: int | None = None
    depth: int | None = None
    workers: int | None = None


class EnumerationStats(BaseModel):
    """Exact statistics of one estimator over its whole configuration space."""

    label: str
    mean: ComplexValue
    second_moment: float
    variance: float
    config_space_size: int

    @classmethod
    def from_result(cls, label: str, result: EnumerationResult) -> "EnumerationStats":
        data = result.to_dict()
        return cls(
            label=label,
            mean=ComplexValue(**data["mean"]),
            second_moment=data["second_moment"],
            variance=data["variance"],
            config_space_size=data["config_space_size"],
        )


class Comparison(BaseModel):
    """Second moments of several estimators relative to the first one."""

    entries: list[EnumerationStats]
    second_moment_ratios: list[float] = Field(
        ..., description="E|X_k|² / E|X_0|² for every entry after the first"
    )


class IdentityRow(BaseModel):
    """Outcome of one verified identity."""

    name: str
    passed: bool
    cases: int
    residual: float
    detail: str = ""

    @classmethod
    def from_outcome(cls, outcome: IdentityOutcome) -> "IdentityRow":
        return cls(**outcome.to_dict())


class BenchRow(BaseModel):
    """Timing of one algorithm at one size."""

    algorithm: str
    n: int
    reps: int
    median_ms: float
    terms: int
    terms_per_sec: float


# --- Report ---


class RunReport(BaseModel):
    """Machine-readable result of one command.

    ``result`` is the value; when the value does not fit a double it holds
    the mantissa and ``exponent`` is set, so the value is result × 2**exponent.
    """

    model_config = ConfigDict(populate_by_name=True)

    schema_version: int = Field(default=1, alias="schema")
    algorithm: str
    algorithm_version: str
    n: int | None = None
    m: int | None = None
    parameters: RunParameters = Field(default_factory=RunParameters)
    result: ComplexValue | None = None
    exponent: int = 0
    std_error: float | None = None
    interval: tuple[float, float] | None = None
    samples: int | None = None
    terms: int | None = None
    elapsed_ms: float = 0.0
    warnings: list[str] = Field(default_factory=list)

    enumeration: EnumerationStats | None = None
    comparison: Comparison | None = None
    identities: list[IdentityRow] | None = None
    bench: list[BenchRow] | None = None

    @model_validator(mode="after")
    def _check_finite(self) -> "RunReport":
        numbers: list[float] = [self.elapsed_ms]
        if self.result is not None:
            numbers += [self.result.re, self.result.im]
        if self.std_error is not None:
            numbers.append(self.std_error)
        if self.interval is not None:
            numbers += list(self.interval)
        if not all(math.isfinite(x) for x in numbers):
            raise ValueError("report fields must be finite")
        return self

    def to_json(self, indent: int | None = 2) -> str:
        return self.model_dump_json(by_alias=True, exclude_none=True, indent=indent)

    @classmethod
    def from_json(cls, text: str) -> "RunReport":
        return cls.model_validate_json(text)

    def to_text(self) -> str:
        """Human-readable rendering."""
        lines = [f"algorithm: {self.algorithm} (version {self.algorithm_version})"]
        if self.n is not None:
            lines.append(f"n: {self.n}  m: {self.m}")
        parameters = self.parameters.model_dump(exclude_none=True)
        if parameters:
            lines.append("parameters: " + ", ".join(f"{k}={v}" for k, v in parameters.items()))
        if self.result is not None:
            value = _format_complex(self.result)
            if self.exponent:
                value = f"({value}) * 2**{self.exponent}"
            lines.append(f"result: {value}")
        if self.std_error is not None:
            lines.append(f"std_error: {self.std_error:.6g}")
        if self.interval is not None:
            lines.append(f"interval: [{self.interval[0]:.10g}, {self.interval[1]:.10g}]")
        if self.samples is not None:
            lines.append(f"samples: {self.samples}")
        if self.terms is not None:
            lines.append(f"terms: {self.terms}")
        if self.enumeration is not None:
            lines.extend(_enumeration_lines(self.enumeration))
        if self.comparison is not None:
            lines.extend(_comparison_lines(self.comparison))
        if self.identities is not None:
            lines.extend(_identity_lines(self.identities))
        if self.bench is not None:
            lines.extend(_bench_lines(self.bench))
        lines.append(f"elapsed_ms: {self.elapsed_ms:.3f}")
        lines.extend(f"warning: {w}" for w in self.warnings)
        return "\n".join(lines)


def new_report(algorithm: str, version: str | None = None, **fields: Any) -> RunReport:
    """Report stamped with the schema version and the algorithm version.

    ``version`` is the producing algorithm's own version; commands that run
    several algorithms record the configured ``algorithm_version``.
    """
    settings = get_settings()
    return RunReport(
        schema=settings.schema_version,
        algorithm=algorithm,
        algorithm_version=version or settings.algorithm_version,
        **fields,
    )


def _format_complex(value: ComplexValue) -> str:
    if value.im == 0:
        return f"{value.re:.12g}"
    sign = "-" if value.im < 0 else "+"
    return f"{value.re:.12g} {sign} {abs(value.im):.12g}i"


def _enumeration_lines(stats: EnumerationStats) -> list[str]:
    return [
        f"enumerated mean: {_format_complex(stats.mean)}",
        f"second moment: {stats.second_moment:.12g}",
        f"variance: {stats.variance:.12g}",
        f"config space: {stats.config_space_size}",
    ]


def _comparison_lines(comparison: Comparison) -> list[str]:
    lines = []
    for entry in comparison.entries:
        lines.append(
            f"{entry.label}: mean {_format_complex(entry.mean)}, "
            f"second moment {entry.second_moment:.12g}, space {entry.config_space_size}"
        )
    for entry, ratio in zip(comparison.entries[1:], comparison.second_moment_ratios):
        lines.append(f"ratio {entry.label} / {comparison.entries[0].label}: {ratio:.12g}")
    return lines


def _identity_lines(rows: list[IdentityRow]) -> list[str]:
    width = max(len(r.name) for r in rows)
    lines = []
    for row in rows:
        status = "pass" if row.passed else "FAIL"
        detail = f"  {row.detail}" if row.detail else ""
        lines.append(
            f"{row.name:<{width}}  {status}  cases={row.cases}  "
            f"residual={row.residual:.2e}{detail}"
        )
    return lines


def _bench_lines(rows: list[BenchRow]) -> list[str]:
    header = f"{'algorithm':<10} {'n':>4} {'median ms':>12} {'terms':>14} {'terms/sec':>12}"
    lines = [header, "-" * len(header)]
    for row in rows:
        lines.append(
            f"{row.algorithm:<10} {row.n:>4} {row.median_ms:>12.3f} "
            f"{row.terms:>14} {row.terms_per_sec:>12.4g}"
        )
    return lines

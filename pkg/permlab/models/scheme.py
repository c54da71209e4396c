"""Per-entry decoupling schemes and their JSON document format."""

import json
import math
from dataclasses import dataclass
from enum import Enum
from typing import Literal, Mapping

from pydantic import BaseModel, Field, ValidationError, model_validator

from permlab.errors import ConfigurationError, ParseError
from permlab.models.matrix import NonzeroPattern

_UNIT_TOLERANCE = 1e-12


class Channel(str, Enum):
    """Random multiplier family for one decoupled entry."""

    SIGN = "sign"  # ℤ₂ density channel
    PHASE = "phase"  # ℤₚ roots of unity


@dataclass(frozen=True)
class SchemeEntry:
    """Decoupling assignment for one nonzero entry."""

    row: int
    col: int
    channel: Channel = Channel.SIGN
    p: int = 2
    fixed: complex = 1 + 0j

    def __post_init__(self) -> None:
        """Validate phase order and unit-modulus multiplier."""
        if self.channel is Channel.SIGN and self.p != 2:
            raise ConfigurationError(f"sign channel at ({self.row}, {self.col}) needs p = 2")
        if self.p < 2:
            raise ConfigurationError(f"phase order {self.p} < 2 at ({self.row}, {self.col})")
        if abs(abs(self.fixed) - 1.0) > _UNIT_TOLERANCE:
            raise ConfigurationError(
                f"fixed multiplier at ({self.row}, {self.col}) is not unit-modulus"
            )

    @property
    def radix(self) -> int:
        return self.p


@dataclass(frozen=True)
class DecouplingScheme:
    """One SchemeEntry per nonzero of the target matrix, in pattern order."""

    entries: tuple[SchemeEntry, ...]

    @property
    def m(self) -> int:
        return len(self.entries)

    @property
    def radices(self) -> tuple[int, ...]:
        return tuple(e.radix for e in self.entries)

    @property
    def config_space_size(self) -> int:
        return math.prod(self.radices)

    def validate_against(self, pattern: NonzeroPattern) -> None:
        """Raise ConfigurationError unless entries match the pattern position by position."""
        if self.m != pattern.m:
            raise ConfigurationError(
                f"scheme has {self.m} entries but the matrix has {pattern.m} nonzeros"
            )
        for entry, (row, col, _) in zip(self.entries, pattern.triples):
            if (entry.row, entry.col) != (row, col):
                raise ConfigurationError(
                    f"scheme entry ({entry.row}, {entry.col}) does not match nonzero ({row}, {col})"
                )

    @classmethod
    def uniform(
        cls,
        pattern: NonzeroPattern,
        channel: Channel = Channel.SIGN,
        p: int = 2,
        fixed: Mapping[tuple[int, int], complex] | None = None,
    ) -> "DecouplingScheme":
        """Same channel on every entry, with optional fixed multipliers by position."""
        fixed = fixed or {}
        order = 2 if channel is Channel.SIGN else p
        return cls(
            entries=tuple(
                SchemeEntry(
                    row=row,
                    col=col,
                    channel=channel,
                    p=order,
                    fixed=complex(fixed.get((row, col), 1.0)),
                )
                for row, col, _ in pattern.triples
            )
        )


# --- JSON document format ---


class FixedMultiplierDocument(BaseModel):
    """Unit-modulus complex multiplier."""

    re: float
    im: float = 0.0


class SchemeEntryDocument(BaseModel):
    """One element of the scheme JSON array."""

    row: int = Field(..., ge=0)
    col: int = Field(..., ge=0)
    channel: Literal["sign", "phase"] = "sign"
    p: int | None = Field(default=None, ge=2)
    fixed: FixedMultiplierDocument | None = None

    @model_validator(mode="after")
    def _check_order(self) -> "SchemeEntryDocument":
        if self.channel == "phase" and self.p is None:
            raise ValueError("phase channel requires p")
        if self.channel == "sign" and self.p not in (None, 2):
            raise ValueError("sign channel implies p = 2")
        return self

    def to_entry(self) -> SchemeEntry:
        fixed = complex(self.fixed.re, self.fixed.im) if self.fixed else 1 + 0j
        return SchemeEntry(
            row=self.row,
            col=self.col,
            channel=Channel(self.channel),
            p=self.p or 2,
            fixed=fixed,
        )


def parse_scheme(text: str, pattern: NonzeroPattern) -> DecouplingScheme:
    """Parse a scheme JSON document and validate it against a nonzero pattern.

    Entries may be listed in any order; they are matched to the pattern by
    position (row, col).
    """
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"scheme is not valid JSON: {e.msg} at line {e.lineno}") from e
    if not isinstance(raw, list):
        raise ParseError("scheme document must be a JSON array")
    try:
        documents = [SchemeEntryDocument.model_validate(item) for item in raw]
    except ValidationError as e:
        raise ParseError(f"invalid scheme entry: {e.errors()[0]['msg']}") from e

    by_position: dict[tuple[int, int], SchemeEntry] = {}
    for doc in documents:
        key = (doc.row, doc.col)
        if key in by_position:
            raise ConfigurationError(f"duplicate scheme entry for {key}")
        by_position[key] = doc.to_entry()

    ordered = []
    for row, col, _ in pattern.triples:
        entry = by_position.pop((row, col), None)
        if entry is None:
            raise ConfigurationError(f"scheme has no entry for nonzero ({row}, {col})")
        ordered.append(entry)
    if by_position:
        extra = sorted(by_position)[0]
        raise ConfigurationError(f"scheme entry {extra} is not a nonzero of the matrix")
    return DecouplingScheme(entries=tuple(ordered))


def scheme_to_document(scheme: DecouplingScheme) -> list[dict]:
    """Serialize a scheme to its JSON document form."""
    return [
        SchemeEntryDocument(
            row=e.row,
            col=e.col,
            channel=e.channel.value,
            p=e.p if e.channel is Channel.PHASE else None,
            fixed=FixedMultiplierDocument(re=e.fixed.real, im=e.fixed.imag),
        ).model_dump(exclude_none=True)
        for e in scheme.entries
    ]

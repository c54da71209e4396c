"""Matrix loading from the whitespace text format and the JSON format.

Text format: lines starting with '#' are comments; every other non-blank
line is one row of whitespace-separated decimal reals; all rows have the
same length.

JSON format: {"re": [[...], ...], "im": [[...], ...]} with "im" optional.
"""

import json
from pathlib import Path
from typing import Any, Mapping

import numpy as np
from pydantic import BaseModel, ValidationError, model_validator

from permlab.errors import ParseError
from permlab.models.matrix import Matrix


class MatrixDocument(BaseModel):
    """JSON matrix document."""

    re: list[list[float]]
    im: list[list[float]] | None = None

    @model_validator(mode="after")
    def _check_shape(self) -> "MatrixDocument":
        if not self.re or not self.re[0]:
            raise ValueError("matrix document is empty")
        width = len(self.re[0])
        for index, row in enumerate(self.re):
            if len(row) != width:
                raise ValueError(f"re row {index} has {len(row)} entries, expected {width}")
        if self.im is not None:
            if len(self.im) != len(self.re) or any(len(r) != width for r in self.im):
                raise ValueError("im must have the same shape as re")
        return self

    def to_matrix(self) -> Matrix:
        data = np.asarray(self.re, dtype=np.complex128)
        if self.im is not None:
            data = data + 1j * np.asarray(self.im, dtype=np.float64)
        return Matrix(data)

    @classmethod
    def from_matrix(cls, matrix: Matrix) -> "MatrixDocument":
        return cls(re=matrix.data.real.tolist(), im=matrix.data.imag.tolist())


def parse_text_matrix(text: str) -> Matrix:
    """Parse the whitespace text format."""
    rows: list[list[float]] = []
    width: int | None = None
    for line_number, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        tokens = stripped.split()
        try:
            row = [float(token) for token in tokens]
        except ValueError as e:
            raise ParseError(f"line {line_number}: non-numeric token ({e})") from e
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise ParseError(
                f"line {line_number}: ragged row with {len(row)} entries, expected {width}"
            )
        rows.append(row)
    if not rows:
        raise ParseError("empty input: no matrix rows found")
    try:
        return Matrix(np.asarray(rows, dtype=np.complex128))
    except ValueError as e:
        raise ParseError(str(e)) from e


def parse_json_matrix(document: Mapping[str, Any] | str) -> Matrix:
    """Parse the JSON format from a string or an already-decoded mapping."""
    if isinstance(document, str):
        try:
            document = json.loads(document)
        except json.JSONDecodeError as e:
            raise ParseError(f"invalid JSON at line {e.lineno}: {e.msg}") from e
    if not isinstance(document, Mapping):
        raise ParseError("JSON matrix must be an object with 're' (and optional 'im')")
    try:
        parsed = MatrixDocument.model_validate(document)
    except ValidationError as e:
        raise ParseError(f"invalid JSON matrix: {e.errors()[0]['msg']}") from e
    try:
        return parsed.to_matrix()
    except ValueError as e:
        raise ParseError(str(e)) from e


def load_matrix(source: str | Mapping[str, Any]) -> Matrix:
    """Load a matrix from text-format source, JSON source, or a decoded JSON mapping."""
    if isinstance(source, Mapping):
        return parse_json_matrix(source)
    if source.lstrip().startswith("{"):
        return parse_json_matrix(source)
    return parse_text_matrix(source)


def read_matrix(path: str | Path) -> Matrix:
    """Read and load a matrix file."""
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e.strerror}") from e
    return load_matrix(text)

"""Shared fixtures for the permanent-lab test suite."""

from pathlib import Path
from typing import Callable, Iterator

import numpy as np
import pytest

from permlab.config import reset_settings
from permlab.models.matrix import Matrix


@pytest.fixture(autouse=True)
def fresh_settings() -> Iterator[None]:
    """Start every test from environment-default settings."""
    reset_settings()
    yield
    reset_settings()


@pytest.fixture
def rng() -> np.random.Generator:
    """A fixed-seed generator."""
    return np.random.default_rng(20240611)


@pytest.fixture
def ones2() -> Matrix:
    """The 2×2 all-ones matrix."""
    return Matrix.ones(2)


@pytest.fixture
def write_matrix(tmp_path: Path) -> Callable[[str, str], str]:
    """Write matrix text to a temporary file and return its path."""

    def write(text: str, name: str = "matrix.txt") -> str:
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    return write

"""Matrix core: loading, factorizations and determinants."""

from permlab.linalg.cofactor import cofactor_determinant
from permlab.linalg.io import (
    MatrixDocument,
    load_matrix,
    parse_json_matrix,
    parse_text_matrix,
    read_matrix,
)
from permlab.linalg.lup import LupFactors, batch_determinant, determinant, lup_decompose
from permlab.linalg.roots import phases, root_table
from permlab.linalg.svd import SvdFactors, svd_decompose

__all__ = [
    "LupFactors",
    "MatrixDocument",
    "SvdFactors",
    "batch_determinant",
    "cofactor_determinant",
    "determinant",
    "load_matrix",
    "lup_decompose",
    "parse_json_matrix",
    "parse_text_matrix",
    "phases",
    "read_matrix",
    "root_table",
    "svd_decompose",
]

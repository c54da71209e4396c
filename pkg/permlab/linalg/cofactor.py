"""Laplace (cofactor) expansion determinant, a slow oracle for small n."""

from permlab.models.matrix import Matrix


def cofactor_determinant(matrix: Matrix) -> complex:
    """det A by first-row cofactor expansion; O(n!), for checking only."""
    n = matrix.require_square("cofactor_determinant")
    rows = [list(matrix.data[i]) for i in range(n)]
    return _expand(rows)


def _expand(rows: list[list[complex]]) -> complex:
    n = len(rows)
    if n == 0:
        return 1 + 0j
    if n == 1:
        return complex(rows[0][0])
    total = 0j
    for col, pivot in enumerate(rows[0]):
        if pivot == 0:
            continue
        minor = [row[:col] + row[col + 1 :] for row in rows[1:]]
        sign = -1 if col % 2 else 1
        total += sign * pivot * _expand(minor)
    return total

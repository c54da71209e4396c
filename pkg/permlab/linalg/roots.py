"""Roots of unity lookup tables."""

from functools import lru_cache

import numpy as np

from permlab.errors import ParameterError


@lru_cache(maxsize=64)
def root_table(p: int) -> np.ndarray:
    """ω**q for q = 1..p with ω = exp(2πi/p), indexed by q - 1.

    Quarter-turn multiples are snapped to exact values so that |ω**q| = 1 and
    ω**p = 1 hold to the last bit.
    """
    if p < 2:
        raise ParameterError(f"phase order p must be >= 2, got {p}")
    q = np.arange(1, p + 1)
    table = np.exp(2j * np.pi * q / p)
    exact = {0: 1 + 0j, 1: 1j, 2: -1 + 0j, 3: -1j}
    for index, power in enumerate(q):
        quarter, rest = divmod(4 * int(power), p)
        if rest == 0:
            table[index] = exact[quarter % 4]
    table = table / np.abs(table)
    table.setflags(write=False)
    return table


def phases(values: np.ndarray, p: int) -> np.ndarray:
    """Map configuration digits v in [0, p) to ω**(v + 1)."""
    return root_table(p)[values]

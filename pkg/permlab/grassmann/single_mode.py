"""Grassmann algebra on one anticommuting quadruple ξ*, ξ, η*, η.

Monomials are bitmasks over the generators in canonical order
ξ* (bit 0), ξ (bit 1), η* (bit 2), η (bit 3); the stored coefficient belongs
to the product written in that order. The composite even pair is
φ = ξη and φ* = η*ξ*.
"""

from dataclasses import dataclass, field
from enum import IntEnum

import numpy as np

XI_STAR, XI, ETA_STAR, ETA = 0, 1, 2, 3
_SIZE = 16


def _reorder_sign(left: int, right: int) -> int:
    """Sign from moving the generators of `right` past the larger ones of `left`."""
    swaps = 0
    for j in range(4):
        if right >> j & 1:
            swaps += bin(left >> (j + 1)).count("1")
    return -1 if swaps % 2 else 1


_SIGNS = np.array(
    [[0 if a & b else _reorder_sign(a, b) for b in range(_SIZE)] for a in range(_SIZE)],
    dtype=np.int8,
)


class Pair(IntEnum):
    """Conjugate generator pairs, valued by the bit of the starred generator."""

    XI = XI_STAR
    ETA = ETA_STAR


@dataclass(frozen=True, eq=False)
class SingleModeGrassmann:
    """Element of the 16-dimensional Grassmann algebra of one mode."""

    coefficients: np.ndarray = field(default_factory=lambda: np.zeros(_SIZE, np.complex128))

    def __post_init__(self) -> None:
        """Validate the coefficient table."""
        table = np.array(self.coefficients, dtype=np.complex128, copy=True)
        if table.shape != (_SIZE,):
            raise ValueError(f"expected {_SIZE} coefficients, got shape {table.shape}")
        table.setflags(write=False)
        object.__setattr__(self, "coefficients", table)

    @classmethod
    def scalar(cls, value: complex) -> "SingleModeGrassmann":
        table = np.zeros(_SIZE, np.complex128)
        table[0] = value
        return cls(table)

    @classmethod
    def generator(cls, index: int) -> "SingleModeGrassmann":
        if not 0 <= index < 4:
            raise ValueError(f"generator index {index} outside 0..3")
        table = np.zeros(_SIZE, np.complex128)
        table[1 << index] = 1
        return cls(table)

    @classmethod
    def phi(cls) -> "SingleModeGrassmann":
        """Composite φ = ξη."""
        return cls.generator(XI) * cls.generator(ETA)

    @classmethod
    def phi_star(cls) -> "SingleModeGrassmann":
        """Composite φ* = η*ξ*."""
        return cls.generator(ETA_STAR) * cls.generator(XI_STAR)

    @classmethod
    def bilinear(cls, pair: Pair) -> "SingleModeGrassmann":
        """ξ*ξ or η*η."""
        return cls.generator(pair.value) * cls.generator(pair.value + 1)

    def coefficient(self, mask: int) -> complex:
        return complex(self.coefficients[mask])

    def __add__(self, other: "SingleModeGrassmann") -> "SingleModeGrassmann":
        return SingleModeGrassmann(self.coefficients + other.coefficients)

    def __sub__(self, other: "SingleModeGrassmann") -> "SingleModeGrassmann":
        return SingleModeGrassmann(self.coefficients - other.coefficients)

    def __neg__(self) -> "SingleModeGrassmann":
        return SingleModeGrassmann(-self.coefficients)

    def scale(self, factor: complex) -> "SingleModeGrassmann":
        return SingleModeGrassmann(self.coefficients * factor)

    def __mul__(self, other: "SingleModeGrassmann | complex") -> "SingleModeGrassmann":
        if not isinstance(other, SingleModeGrassmann):
            return self.scale(complex(other))
        product = np.zeros(_SIZE, np.complex128)
        for a in np.flatnonzero(self.coefficients):
            for b in np.flatnonzero(other.coefficients):
                sign = _SIGNS[a, b]
                if sign:
                    product[a | b] += sign * self.coefficients[a] * other.coefficients[b]
        return SingleModeGrassmann(product)

    def __rmul__(self, other: complex) -> "SingleModeGrassmann":
        return self.scale(complex(other))

    def exp(self) -> "SingleModeGrassmann":
        """exp of an even element; the series stops at degree 4."""
        odd = [mask for mask in range(_SIZE) if bin(mask).count("1") % 2]
        if np.any(self.coefficients[odd]):
            raise ValueError("exp is defined here for even elements only")
        constant = complex(self.coefficients[0])
        nilpotent = self - SingleModeGrassmann.scalar(constant)
        result = SingleModeGrassmann.scalar(1)
        power = SingleModeGrassmann.scalar(1)
        for k in (1, 2):
            power = (power * nilpotent).scale(1 / k)
            result = result + power
        return result.scale(np.exp(constant))

    def max_difference(self, other: "SingleModeGrassmann") -> float:
        return float(np.abs(self.coefficients - other.coefficients).max())


def integrate_pair(element: SingleModeGrassmann, pair: Pair) -> SingleModeGrassmann:
    """Berezin integral ∫[dχ* dχ] over one pair, normalized by ∫[dχ* dχ] χχ* = 1.

    The even bilinear χ*χ = -χχ* commutes with everything, so a monomial
    χ*χ·R integrates to -R and monomials lacking χ or χ* integrate to 0.
    """
    star_bit = 1 << pair.value
    plain_bit = 1 << (pair.value + 1)
    both = star_bit | plain_bit
    result = np.zeros(_SIZE, np.complex128)
    for mask in np.flatnonzero(element.coefficients):
        if mask & both == both:
            rest = int(mask) & ~both
            # canonical χ*χ sits contiguously in the ordering, so R keeps its order
            result[rest] -= element.coefficients[mask]
    return SingleModeGrassmann(result)

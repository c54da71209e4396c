"""Zeon algebra: commuting nilpotent generators φ*_1..φ*_n, φ_1..φ_n.

An element is a table from (starred subset, unstarred subset) to complex
coefficients, subsets encoded as bitmasks. Generators commute, so a product
of monomials is the union of their subsets, or zero if either family
overlaps.
"""

import math
from dataclasses import dataclass, field
from typing import Mapping

import numpy as np

from permlab.config import get_settings
from permlab.models.matrix import Matrix

Monomial = tuple[int, int]


@dataclass(frozen=True)
class ZeonElement:
    """Element of the zeon algebra on n modes."""

    n: int
    coefficients: Mapping[Monomial, complex] = field(default_factory=dict)

    def __post_init__(self) -> None:
        """Validate subsets and drop zero coefficients."""
        full = (1 << self.n) - 1
        cleaned: dict[Monomial, complex] = {}
        for (star, plain), value in self.coefficients.items():
            if star & ~full or plain & ~full:
                raise ValueError(f"monomial ({star:b}, {plain:b}) outside {self.n} modes")
            if value != 0:
                cleaned[(star, plain)] = complex(value)
        object.__setattr__(self, "coefficients", cleaned)

    @classmethod
    def scalar(cls, n: int, value: complex) -> "ZeonElement":
        return cls(n, {(0, 0): value})

    @classmethod
    def star(cls, n: int, mode: int) -> "ZeonElement":
        """The generator φ*_mode."""
        return cls(n, {(1 << mode, 0): 1})

    @classmethod
    def plain(cls, n: int, mode: int) -> "ZeonElement":
        """The generator φ_mode."""
        return cls(n, {(0, 1 << mode): 1})

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def coefficient(self, star: int, plain: int) -> complex:
        return self.coefficients.get((star, plain), 0j)

    def _check(self, other: "ZeonElement") -> None:
        if other.n != self.n:
            raise ValueError(f"cannot combine zeon elements on {self.n} and {other.n} modes")

    def __add__(self, other: "ZeonElement") -> "ZeonElement":
        self._check(other)
        total = dict(self.coefficients)
        for key, value in other.coefficients.items():
            total[key] = total.get(key, 0j) + value
        return ZeonElement(self.n, total)

    def __sub__(self, other: "ZeonElement") -> "ZeonElement":
        return self + other.scale(-1)

    def scale(self, factor: complex) -> "ZeonElement":
        return ZeonElement(self.n, {k: v * factor for k, v in self.coefficients.items()})

    def __mul__(self, other: "ZeonElement | complex") -> "ZeonElement":
        if not isinstance(other, ZeonElement):
            return self.scale(complex(other))
        self._check(other)
        product: dict[Monomial, complex] = {}
        for (star_a, plain_a), value_a in self.coefficients.items():
            for (star_b, plain_b), value_b in other.coefficients.items():
                if star_a & star_b or plain_a & plain_b:
                    continue
                key = (star_a | star_b, plain_a | plain_b)
                product[key] = product.get(key, 0j) + value_a * value_b
        return ZeonElement(self.n, product)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not self.coefficients

    def exp(self) -> "ZeonElement":
        """exp(x) = e**c · Σ_k y**k / k! with c the scalar part and y = x - c nilpotent."""
        constant = self.coefficient(0, 0)
        nilpotent = self - ZeonElement.scalar(self.n, constant)
        result = ZeonElement.scalar(self.n, 1)
        power = ZeonElement.scalar(self.n, 1)
        k = 0
        while True:
            k += 1
            power = power * nilpotent
            if power.is_zero():
                break
            result = result + power.scale(1 / math.factorial(k))
        return result.scale(np.exp(constant))

    def max_difference(self, other: "ZeonElement") -> float:
        """Largest coefficient-wise |self - other|."""
        difference = self - other
        return max((abs(v) for v in difference.coefficients.values()), default=0.0)


def quadratic_form(matrix: Matrix) -> ZeonElement:
    """Σ_ij φ*_i A_ij φ_j."""
    n = matrix.require_square("quadratic_form")
    return ZeonElement(
        n,
        {(1 << i, 1 << j): complex(matrix.data[i, j]) for i in range(n) for j in range(n)},
    )


def _check_zeon_size(n: int) -> None:
    guards = get_settings().guards
    guards.check("zeon n", n, guards.zeon_max_n)


def zeon_exp_quadratic(matrix: Matrix) -> ZeonElement:
    """Expansion of exp(Σ_ij φ*_i A_ij φ_j); n ≤ 4 unless overridden."""
    n = matrix.require_square("zeon_exp_quadratic")
    _check_zeon_size(n)
    return quadratic_form(matrix).exp()


def zeon_product_form(matrix: Matrix) -> ZeonElement:
    """Π_i (1 + φ*_i Σ_j A_ij φ_j), equal to zeon_exp_quadratic(A)."""
    n = matrix.require_square("zeon_product_form")
    _check_zeon_size(n)
    result = ZeonElement.scalar(n, 1)
    for i in range(n):
        row = ZeonElement(n, {(0, 1 << j): complex(matrix.data[i, j]) for j in range(n)})
        result = result * (ZeonElement.scalar(n, 1) + ZeonElement.star(n, i) * row)
    return result


def berezin_top_coefficient(element: ZeonElement) -> complex:
    """∫[dφ* dφ] x: the coefficient of the full starred and unstarred product."""
    full = element.full_mask
    return element.coefficient(full, full)

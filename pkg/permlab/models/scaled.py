"""Overflow-safe scaled representation of complex values."""

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class ScaledValue:
    """A complex value stored as mantissa × 2**exponent.

    |mantissa| lies in [1, 2), or the mantissa is 0 with exponent 0. Scaling by
    powers of two is exact, so converting to and from a plain complex is
    lossless while the exponent stays inside the double range.
    """

    mantissa: complex = 0j
    exponent: int = 0

    def __post_init__(self) -> None:
        """Validate normalization."""
        magnitude = abs(self.mantissa)
        if not math.isfinite(magnitude):
            raise ValueError("ScaledValue mantissa must be finite")
        if magnitude == 0:
            if self.exponent != 0:
                raise ValueError("zero must be represented with exponent 0")
        elif not 1.0 <= magnitude < 2.0:
            raise ValueError(f"mantissa magnitude {magnitude} outside [1, 2)")

    @classmethod
    def zero(cls) -> "ScaledValue":
        return cls(0j, 0)

    @classmethod
    def one(cls) -> "ScaledValue":
        return cls(1 + 0j, 0)

    @classmethod
    def from_parts(cls, value: complex, exponent: int = 0) -> "ScaledValue":
        """Normalize value × 2**exponent."""
        value = complex(value)
        magnitude = abs(value)
        if magnitude == 0:
            return cls.zero()
        if not math.isfinite(magnitude):
            raise ValueError("cannot scale a non-finite value")
        _, e = math.frexp(magnitude)
        shift = e - 1
        mantissa = complex(
            math.ldexp(value.real, -shift), math.ldexp(value.imag, -shift)
        )
        # frexp rounding of |z| can land exactly on 2.0
        if abs(mantissa) >= 2.0:
            mantissa = complex(math.ldexp(mantissa.real, -1), math.ldexp(mantissa.imag, -1))
            shift += 1
        elif abs(mantissa) < 1.0:
            mantissa = complex(math.ldexp(mantissa.real, 1), math.ldexp(mantissa.imag, 1))
            shift -= 1
        return cls(mantissa, exponent + shift)

    @classmethod
    def from_complex(cls, value: complex) -> "ScaledValue":
        return cls.from_parts(value, 0)

    def __mul__(self, other: "ScaledValue | complex | float") -> "ScaledValue":
        if not isinstance(other, ScaledValue):
            other = ScaledValue.from_complex(complex(other))
        return ScaledValue.from_parts(
            self.mantissa * other.mantissa, self.exponent + other.exponent
        )

    __rmul__ = __mul__

    def __neg__(self) -> "ScaledValue":
        return ScaledValue(-self.mantissa, self.exponent)

    def scale_pow2(self, power: int) -> "ScaledValue":
        """Multiply by 2**power exactly."""
        if self.mantissa == 0:
            return self
        return ScaledValue(self.mantissa, self.exponent + power)

    def to_complex(self) -> complex:
        """Plain complex value; may overflow to inf for huge exponents."""
        try:
            return complex(
                math.ldexp(self.mantissa.real, self.exponent),
                math.ldexp(self.mantissa.imag, self.exponent),
            )
        except OverflowError:
            return complex(
                math.copysign(math.inf, self.mantissa.real) if self.mantissa.real else 0.0,
                math.copysign(math.inf, self.mantissa.imag) if self.mantissa.imag else 0.0,
            )

    @property
    def real(self) -> float:
        return self.to_complex().real

    @property
    def imag(self) -> float:
        return self.to_complex().imag

    @property
    def log2_abs(self) -> float:
        """log2 |value|; -inf for zero."""
        if self.mantissa == 0:
            return -math.inf
        return math.log2(abs(self.mantissa)) + self.exponent

    def __float__(self) -> float:
        return self.real

    def __complex__(self) -> complex:
        return self.to_complex()

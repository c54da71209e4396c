"""Reflected mixed-radix Gray codes.

Digit 0 changes fastest. Consecutive indices differ in exactly one digit,
by ±1, and the state at any index can be computed directly, so ranges of
the sequence can be handed to independent workers.
"""

from dataclasses import dataclass
from typing import Iterator, Sequence


@dataclass(frozen=True)
class GrayStep:
    """One move of the Gray sequence: digit `position` goes from `old` to `new`."""

    index: int
    position: int
    old: int
    new: int


class GrayCounter:
    """Mutable cursor over a reflected mixed-radix Gray sequence."""

    def __init__(self, radices: Sequence[int], start: int = 0) -> None:
        if any(r < 1 for r in radices):
            raise ValueError("radices must be positive")
        self.radices = tuple(radices)
        self.index = start
        self.digits, self.directions = gray_state(start, self.radices)

    def advance(self) -> GrayStep | None:
        """Move to the next index; None when the sequence is exhausted."""
        for position, radix in enumerate(self.radices):
            target = self.digits[position] + self.directions[position]
            if 0 <= target < radix:
                old = self.digits[position]
                self.digits[position] = target
                for lower in range(position):
                    self.directions[lower] = -self.directions[lower]
                self.index += 1
                return GrayStep(self.index, position, old, target)
        return None


def gray_state(index: int, radices: Sequence[int]) -> tuple[list[int], list[int]]:
    """Digits and travel directions of the reflected Gray code at `index`."""
    digits: list[int] = []
    directions: list[int] = []
    block = 1
    for radix in radices:
        plain = (index // block) % radix
        if (index // (block * radix)) % 2 == 0:
            digits.append(plain)
            directions.append(1)
        else:
            digits.append(radix - 1 - plain)
            directions.append(-1)
        block *= radix
    return digits, directions


def gray_sequence(radices: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """All digit tuples in Gray order, starting from all zeros."""
    counter = GrayCounter(radices)
    yield tuple(counter.digits)
    while counter.advance() is not None:
        yield tuple(counter.digits)

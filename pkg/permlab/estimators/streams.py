"""Seeded, partitionable sample streams.

Stream s draws its samples in blocks of ``block_size``. Block b is generated
from its own generator, ``SeedSequence(seed, spawn_key=(s, b))``, so any
sample can be regenerated from (seed, stream, index) alone and distinct
streams never share generator state.
"""

from dataclasses import dataclass
from typing import Any, Iterator

import numpy as np

from permlab.estimators.interface import Estimator


def block_generator(seed: int, stream: int, block: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(stream, block)))


@dataclass(frozen=True, eq=False)
class EstimatorStream:
    """A reproducible i.i.d. sample source for one estimator."""

    estimator: Estimator
    seed: int
    stream: int = 0
    block_size: int = 4096

    def __post_init__(self) -> None:
        """Validate seed, stream and block size."""
        if self.seed < 0:
            raise ValueError("seed must be non-negative")
        if self.stream < 0:
            raise ValueError("stream index must be non-negative")
        if self.block_size < 1:
            raise ValueError("block_size must be positive")

    @property
    def tag(self) -> str:
        return self.estimator.tag.value

    @property
    def parameters(self) -> dict[str, Any]:
        return self.estimator.parameters

    def block(self, index: int) -> np.ndarray:
        """All samples of block `index`."""
        rng = block_generator(self.seed, self.stream, index)
        return self.estimator.sample_batch(rng, self.block_size)

    def blocks(self, start: int = 0) -> Iterator[np.ndarray]:
        index = start
        while True:
            yield self.block(index)
            index += 1

    def sample_at(self, index: int) -> complex:
        """The sample at position `index` of this stream."""
        block, offset = divmod(index, self.block_size)
        return complex(self.block(block)[offset])

    def take(self, count: int) -> np.ndarray:
        """The first `count` samples of this stream."""
        chunks: list[np.ndarray] = []
        remaining = count
        for chunk in self.blocks():
            if remaining <= 0:
                break
            chunks.append(chunk[:remaining])
            remaining -= len(chunks[-1])
        return np.concatenate(chunks) if chunks else np.empty(0, dtype=np.complex128)

    def partition(self, streams: int) -> list["EstimatorStream"]:
        """Streams 0..streams-1 with this seed and estimator, one per worker."""
        return [
            EstimatorStream(self.estimator, self.seed, index, self.block_size)
            for index in range(streams)
        ]

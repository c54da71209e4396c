"""Registry of exact permanent algorithms by tag."""

from typing import Callable

from permlab.errors import ParameterError
from permlab.exact.gauge import GaugeZ2Permanent, GaugeZpPermanent
from permlab.exact.glynn import GlynnPermanent
from permlab.exact.interface import PermanentAlgorithm
from permlab.exact.naive import NaivePermanent
from permlab.exact.ryser import RyserPermanent
from permlab.models.results import ExactAlgorithm

AlgorithmFactory = Callable[..., PermanentAlgorithm]


class ExactRegistry:
    """Maps algorithm tags to factories.

    Factories take keyword options (``p`` for gauge-zp, ``workers``) so the
    CLI can build any algorithm from its flags.
    """

    def __init__(self) -> None:
        self._factories: dict[ExactAlgorithm, AlgorithmFactory] = {}
        self._initialize_default_algorithms()

    def _initialize_default_algorithms(self) -> None:
        self._factories[ExactAlgorithm.NAIVE] = self._without_p(NaivePermanent)
        self._factories[ExactAlgorithm.RYSER] = self._without_p(RyserPermanent)
        self._factories[ExactAlgorithm.GLYNN] = self._without_p(GlynnPermanent)
        self._factories[ExactAlgorithm.GAUGE_Z2] = self._without_p(GaugeZ2Permanent)
        self._factories[ExactAlgorithm.GAUGE_ZP] = self._create_gauge_zp

    @staticmethod
    def _without_p(cls: type[PermanentAlgorithm]) -> AlgorithmFactory:
        def factory(p: int | None = None, workers: int | None = None) -> PermanentAlgorithm:
            return cls(workers=workers)

        return factory

    @staticmethod
    def _create_gauge_zp(p: int | None = None, workers: int | None = None) -> PermanentAlgorithm:
        if p is None:
            raise ParameterError("gauge-zp requires --p")
        return GaugeZpPermanent(p, workers=workers)

    def create(
        self, algorithm: ExactAlgorithm | str, p: int | None = None, workers: int | None = None
    ) -> PermanentAlgorithm:
        """Build an algorithm instance.

        Raises:
            ParameterError: Unknown tag, or gauge-zp without p
        """
        try:
            tag = ExactAlgorithm(algorithm)
        except ValueError as e:
            raise ParameterError(f"unknown exact algorithm {algorithm!r}") from e
        return self._factories[tag](p=p, workers=workers)

    def register(self, algorithm: ExactAlgorithm, factory: AlgorithmFactory) -> None:
        """Replace the factory for a tag."""
        self._factories[algorithm] = factory

    def list_algorithms(self) -> list[ExactAlgorithm]:
        return list(self._factories)


# Global registry instance
_registry: ExactRegistry | None = None


def get_exact_registry() -> ExactRegistry:
    """Get or create the global exact-algorithm registry."""
    global _registry
    if _registry is None:
        _registry = ExactRegistry()
    return _registry

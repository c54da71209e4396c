"""Estimator registry mapping command-line tags to factories."""

from typing import Callable

from permlab.errors import ParameterError
from permlab.estimators.continuous import LuEstimator, SvdEstimator
from permlab.estimators.discrete import (
    CustomSchemeEstimator,
    GaugeEstimator,
    GodsilGutmanEstimator,
    KkllEstimator,
    PairingEstimator,
    RecursiveEstimator,
)
from permlab.estimators.interface import Estimator, EstimatorTag
from permlab.models.matrix import Matrix
from permlab.models.scheme import DecouplingScheme

EstimatorFactory = Callable[..., Estimator]

# Phase order used when --p is not given
DEFAULT_P = {
    EstimatorTag.KKLL: 3,
    EstimatorTag.PAIRING: 2,
    EstimatorTag.GAUGE: 2,
}


class EstimatorRegistry:
    """Builds estimators from a tag plus keyword options.

    Options: ``p`` (phase order), ``scheme`` (custom), ``depth`` (recursive).
    Options an estimator does not use are ignored.
    """

    def __init__(self) -> None:
        self._factories: dict[EstimatorTag, EstimatorFactory] = {
            EstimatorTag.GODSIL_GUTMAN: lambda a, **_: GodsilGutmanEstimator(a),
            EstimatorTag.KKLL: lambda a, p, **_: KkllEstimator(a, p),
            EstimatorTag.PAIRING: lambda a, p, **_: PairingEstimator(a, p),
            EstimatorTag.GAUGE: lambda a, p, **_: GaugeEstimator(a, p),
            EstimatorTag.CUSTOM: self._create_custom,
            EstimatorTag.RECURSIVE: lambda a, depth, **_: RecursiveEstimator(a, depth),
            EstimatorTag.LU_MC: lambda a, **_: LuEstimator(a),
            EstimatorTag.SVD_MC: lambda a, **_: SvdEstimator(a),
        }

    @staticmethod
    def _create_custom(
        matrix: Matrix, scheme: DecouplingScheme | None = None, **_: object
    ) -> Estimator:
        if scheme is None:
            raise ParameterError("custom estimator requires a scheme")
        return CustomSchemeEstimator(matrix, scheme)

    @staticmethod
    def resolve(tag: EstimatorTag | str) -> EstimatorTag:
        try:
            return EstimatorTag(tag)
        except ValueError as e:
            raise ParameterError(f"unknown estimator {tag!r}") from e

    def create(
        self,
        tag: EstimatorTag | str,
        matrix: Matrix,
        p: int | None = None,
        scheme: DecouplingScheme | None = None,
        depth: int = 1,
    ) -> Estimator:
        """Build an estimator bound to a matrix.

        Raises:
            ParameterError: Unknown tag or missing option
            EstimatorDomainError: Matrix violates the estimator's precondition
        """
        resolved = self.resolve(tag)
        order = p if p is not None else DEFAULT_P.get(resolved, 2)
        return self._factories[resolved](matrix, p=order, scheme=scheme, depth=depth)

    def register(self, tag: EstimatorTag, factory: EstimatorFactory) -> None:
        self._factories[tag] = factory

    def list_tags(self) -> list[EstimatorTag]:
        return list(self._factories)


# Global registry instance
_registry: EstimatorRegistry | None = None


def get_estimator_registry() -> EstimatorRegistry:
    """Get or create the global estimator registry."""
    global _registry
    if _registry is None:
        _registry = EstimatorRegistry()
    return _registry

"""permanent-lab models module."""

from permlab.models.matrix import Matrix, NonzeroPattern, nonzeros
from permlab.models.results import (
    Configuration,
    EnumerationResult,
    EstimatorSample,
    ExactAlgorithm,
    ExactResult,
)
from permlab.models.scaled import ScaledValue
from permlab.models.scheme import (
    Channel,
    DecouplingScheme,
    SchemeEntry,
    parse_scheme,
    scheme_to_document,
)

__all__ = [
    # Matrices
    "Matrix",
    "NonzeroPattern",
    "nonzeros",
    "ScaledValue",
    # Results
    "Configuration",
    "EnumerationResult",
    "EstimatorSample",
    "ExactAlgorithm",
    "ExactResult",
    # Schemes
    "Channel",
    "DecouplingScheme",
    "SchemeEntry",
    "parse_scheme",
    "scheme_to_document",
]

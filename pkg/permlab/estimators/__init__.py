"""Unbiased permanent estimators: discrete decoupling and Gaussian integrals."""

from permlab.estimators.continuous import (
    GaussianSampleVector,
    LuEstimator,
    SvdEstimator,
    draw_gaussian_vector,
    gaussian_batch,
    sample_lu_integrand,
    sample_svd_integrand,
)
from permlab.estimators.discrete import (
    CustomSchemeEstimator,
    GaugeEstimator,
    GodsilGutmanEstimator,
    KkllEstimator,
    PairingEstimator,
    RecursiveEstimator,
    pairing_row_column_product,
    sample_custom_scheme,
    sample_gauge_zp,
    sample_godsil_gutman,
    sample_kkll_zp,
    sample_pairing,
    sample_recursive,
)
from permlab.estimators.enumeration import (
    configuration_block,
    enumerate_estimator,
    enumerate_expectation,
)
from permlab.estimators.interface import DiscreteEstimator, Estimator, EstimatorTag
from permlab.estimators.registry import EstimatorRegistry, get_estimator_registry
from permlab.estimators.streams import EstimatorStream, block_generator

__all__ = [
    # Interface
    "DiscreteEstimator",
    "Estimator",
    "EstimatorRegistry",
    "EstimatorStream",
    "EstimatorTag",
    "block_generator",
    "get_estimator_registry",
    # Discrete
    "CustomSchemeEstimator",
    "GaugeEstimator",
    "GodsilGutmanEstimator",
    "KkllEstimator",
    "PairingEstimator",
    "RecursiveEstimator",
    "pairing_row_column_product",
    "sample_custom_scheme",
    "sample_gauge_zp",
    "sample_godsil_gutman",
    "sample_kkll_zp",
    "sample_pairing",
    "sample_recursive",
    # Continuous
    "GaussianSampleVector",
    "LuEstimator",
    "SvdEstimator",
    "draw_gaussian_vector",
    "gaussian_batch",
    "sample_lu_integrand",
    "sample_svd_integrand",
    # Enumeration
    "configuration_block",
    "enumerate_estimator",
    "enumerate_expectation",
]

"""permanent-lab: exact algorithms and unbiased estimators for the matrix permanent."""

__version__ = "0.1.0"

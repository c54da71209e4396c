"""Exception hierarchy for permanent-lab.

Every error carries the process exit code the CLI reports for it and a short
reason string. Input-validation errors also derive from ValueError so callers
can catch them the usual way.
"""


class PermanentLabError(Exception):
    """Base class for all permanent-lab errors."""

    exit_code: int = 1
    code_name: str = "error"

    def __init__(self, reason: str) -> None:
        super().__init__(reason)
        self.reason = reason

    def one_line(self) -> str:
        """Machine-parsable single-line description."""
        return f"{self.code_name}: {' '.join(self.reason.split())}"


class ParseError(PermanentLabError, ValueError):
    """Matrix or scheme document could not be parsed."""

    exit_code = 2
    code_name = "parse-error"


class ParameterError(PermanentLabError, ValueError):
    """An algorithm parameter is out of range (e.g. p < 2)."""

    exit_code = 2
    code_name = "parameter-error"


class NonFiniteError(PermanentLabError, ValueError):
    """NaN or Inf where only finite values are allowed."""

    exit_code = 2
    code_name = "non-finite"


class InsufficientDataError(PermanentLabError, ValueError):
    """Too few samples for the requested statistic."""

    exit_code = 2
    code_name = "insufficient-data"


class ShapeError(PermanentLabError, ValueError):
    """Matrix shape does not fit the operation (non-square, ragged...)."""

    exit_code = 3
    code_name = "shape-error"


class UnsupportedInputError(PermanentLabError, ValueError):
    """Input kind is outside what an operation supports (e.g. complex SVD)."""

    exit_code = 3
    code_name = "unsupported-input"


class SizeGuardError(PermanentLabError, ValueError):
    """Problem size exceeds a configured guard."""

    exit_code = 4
    code_name = "size-guard"


class EstimatorDomainError(PermanentLabError, ValueError):
    """Matrix violates an estimator precondition (e.g. a negative entry)."""

    exit_code = 5
    code_name = "domain-error"


class ConfigurationError(PermanentLabError, ValueError):
    """Decoupling scheme does not match the matrix it is applied to."""

    exit_code = 5
    code_name = "configuration-error"


class ConvergenceError(PermanentLabError):
    """An iterative factorization did not converge."""

    exit_code = 6
    code_name = "convergence-error"

    def __init__(self, reason: str, residual: float) -> None:
        super().__init__(reason)
        self.residual = residual


class VerificationError(PermanentLabError):
    """A verified identity did not hold."""

    exit_code = 1
    code_name = "verification-failed"

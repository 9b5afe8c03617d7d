"""Exception hierarchy shared across the package.

The CLI maps these onto exit codes: validation/schema/config problems
exit 1, estimation problems exit 2, I/O problems exit 3.
"""


class MultidcaError(Exception):
    """Base class for all package-specific errors."""


class ValidationError(MultidcaError):
    """Input data violates an invariant (bad counts, duplicates, ...)."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class SchemaError(ValidationError):
    """An input file does not conform to its expected schema."""


class ConfigError(MultidcaError):
    """Invalid run configuration (missing control, bad sweep spec, ...)."""


class EstimationError(MultidcaError):
    """A required quantity cannot be estimated from the available data."""


class NotEstimableError(EstimationError):
    """The congruent dataset defeats synthesis for a threshold combination."""


class ConnectivityError(EstimationError):
    """The treatment network is disconnected."""

    def __init__(self, message: str, components: list[list[str]] | None = None):
        super().__init__(message)
        self.components = components or []

"""Exception types shared across the package.

The CLI maps these onto stable exit codes, and the HTTP service maps them
onto status codes, so new error conditions should reuse one of the classes
below rather than raising bare ValueErrors.
"""


class QLaplaceError(Exception):
    """Base class for every error raised by this package."""


class ParameterError(QLaplaceError, ValueError):
    """A parameter lies outside its documented domain."""


class ShapeError(ParameterError):
    """An index or array length does not match the declared sizes."""


class DomainError(ParameterError):
    """A mathematical domain violation, e.g. evaluating at a pole."""


class UnsupportedStructureError(ParameterError):
    """The operator lacks the diagonal L = H structure the fast circuit needs."""


class DegenerateSignalError(QLaplaceError):
    """The signal vanishes on the whole grid, leaving PREP amplitudes undefined."""


class ResourceLimitError(QLaplaceError):
    """The request exceeds the dense-simulation resource guards."""


class UnsupportedOracleError(QLaplaceError):
    """No closed-form transform is available for this signal kind."""

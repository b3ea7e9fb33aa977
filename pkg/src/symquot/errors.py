"""Shared exception types.

DomainError covers inputs that are syntactically fine but outside the
supported geometric regime; the CLI maps it to exit code 3 and prints a
one-line reason of the form ``error: <code>: <message>``. Malformed
input (bad flags, unparseable files) stays on ValueError and exits 2.
"""


class DomainError(Exception):
    """Valid input, unsupported regime."""

    code = "domain"


class QuasiReflectionError(DomainError):
    """The group contains quasi-reflections, so no quotient verdict is taken."""

    code = "quasi-reflection"

    def __init__(self, message: str, elements: tuple[str, ...] = ()):
        super().__init__(message)
        self.elements = tuple(elements)


class UnsupportedDimensionError(DomainError):
    """Base dimension too small: the model acquires quasi-reflections."""

    code = "unsupported-dimension"


class GroupTooLargeError(DomainError):
    """Multiplicative closure exceeded the configured cap."""

    code = "group-too-large"

    def __init__(self, message: str, cap: int):
        super().__init__(message)
        self.cap = cap


class MatrixTooLargeError(DomainError):
    """Requested brute-force matrix exceeds the size cap."""

    code = "matrix-too-large"


class InsufficientDataError(DomainError):
    """Not enough usable rows for a growth fit."""

    code = "insufficient-data"

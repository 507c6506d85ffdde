"""Exception types shared across the package."""

from __future__ import annotations


class QdtError(Exception):
    """Base class for every error raised by this package."""


class InvalidScenario(QdtError):
    """A scenario is structurally or semantically invalid.

    ``path`` is a dotted/indexed field path into the scenario document
    (e.g. ``prospects[1].amplitudes[0].modes``) when the problem can be
    located.
    """

    def __init__(self, message: str, path: str | None = None):
        self.path = path
        super().__init__(f"{path}: {message}" if path else message)


class SupportViolation(InvalidScenario):
    """An amplitude was assigned outside a prospect's declared support."""


class ParseError(QdtError):
    """Scenario text is not well-formed.  Carries line/column when known."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"line {line}, column {column}: {message}"
        super().__init__(message)


class DimensionError(QdtError):
    """Vectors or operators of incompatible dimensions were combined."""


class ZeroNormError(QdtError):
    """A zero vector was passed where a normalizable vector is required."""


class NormalizationError(QdtError):
    """A normalization condition failed beyond tolerance.

    ``residuals`` maps each violated condition to its residual.  When a
    full evaluation was completed before the check fired, it is attached
    as ``state`` so callers can still report the numbers.
    """

    def __init__(self, message: str, residuals: dict[str, float] | None = None, state=None):
        self.residuals = dict(residuals or {})
        self.state = state
        if self.residuals:
            detail = ", ".join(f"{k}={v:.3e}" for k, v in sorted(self.residuals.items()))
            message = f"{message} ({detail})"
        super().__init__(message)


class NumericalError(QdtError):
    """An analytically impossible numerical outcome; signals a code defect."""


class StateError(QdtError):
    """A prospect was not found in (or not covered by) an evaluated state."""


class UsageError(QdtError):
    """Bad command-line usage or an unknown built-in name."""

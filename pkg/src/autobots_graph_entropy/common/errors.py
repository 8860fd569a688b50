# ABOUTME: Exception hierarchy for spectral and entropy computations.
# ABOUTME: All library errors derive from GraphEntropyError (a ValueError) so callers can catch one type.

from typing import Any


class GraphEntropyError(ValueError):
    """Base class for every error raised by the library."""


class InvalidDecimationError(GraphEntropyError):
    """Decimation factor outside the exactly solvable range (l >= 3)."""


class DomainError(GraphEntropyError):
    """Argument outside the documented domain of an operation."""


class PoleError(GraphEntropyError):
    """Argument sits on (or numerically too close to) a pole."""


class PrecisionError(GraphEntropyError):
    """Internal cancellation would exceed the configured error budget."""


class ResourceLimitError(GraphEntropyError):
    """The requested evaluation needs more terms than the configured cap."""


class QuadratureError(GraphEntropyError):
    """Numerical integration did not converge."""

    def __init__(self, message: str, diagnostics: dict[str, Any] | None = None) -> None:
        super().__init__(message)
        self.diagnostics = diagnostics or {}

    def __str__(self) -> str:
        base = super().__str__()
        if not self.diagnostics:
            return base
        details = ", ".join(f"{k}={v}" for k, v in self.diagnostics.items())
        return f"{base} ({details})"

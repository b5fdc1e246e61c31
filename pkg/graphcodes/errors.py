from __future__ import annotations

from collections.abc import Iterable


class GraphCodesError(Exception):
    pass


class FieldMismatchError(GraphCodesError, ValueError):
    """Operands live over different fields or in different ambient spaces."""


class ZeroDivisionFieldError(GraphCodesError, ZeroDivisionError):
    pass


class ValidationError(GraphCodesError, ValueError):
    """Input violates an invariant; `violations` names each failed one."""

    def __init__(self, message: str, violations: Iterable[object] = ()) -> None:
        super().__init__(message)
        self.violations = list(violations)


class SizeLimitError(GraphCodesError):
    pass


class UnsupportedCharacterError(GraphCodesError):
    pass


class ConsistencyError(GraphCodesError, AssertionError):
    """An internal invariant failed; valid input never triggers this."""

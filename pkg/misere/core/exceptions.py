from typing import Any


class MisereError(Exception):
    """Base exception for the misère quotient solver."""

    def __init__(self, message: str, code: str | None = None):
        self.message = message
        self.code = code
        super().__init__(message)


class CodeSyntaxError(MisereError, ValueError):
    """Malformed octal code string."""

    pass


class ExpressionSyntaxError(MisereError, ValueError):
    """Malformed game expression."""

    pass


class WordSyntaxError(MisereError, ValueError):
    """Malformed monoid word or presentation text."""

    pass


class UnknownGeneratorError(MisereError, ValueError):
    """A word mentions a generator the monoid does not have."""

    pass


class AlphabetBoundError(MisereError):
    """Heap size outside the configured alphabet."""

    pass


class BudgetExceededError(MisereError):
    """A configured search budget ran out before an answer was reached."""

    def __init__(self, message: str, budget: str, frontier: Any = None):
        super().__init__(message, code="budget")
        self.budget = budget
        self.frontier = frontier


class OrderBoundError(MisereError):
    """Monoid enumeration exceeded its element bound."""

    pass


class RecalibrationStuckError(MisereError):
    """Every expansion in the policy failed to move the least failure."""

    def __init__(self, message: str, diagnostics: dict[str, Any] | None = None):
        super().__init__(message, code="recalibration_stuck")
        self.diagnostics = diagnostics or {}


class IsomorphismTooLargeError(MisereError):
    """Monoid too large for the isomorphism search."""

    pass


class InconsistentWitnessError(MisereError):
    """A constructed distinguishing witness failed its own check."""

    pass


class CatalogError(MisereError):
    """Builtin solution data is malformed."""

    pass


class CacheError(MisereError):
    """Quotient cache could not be read or written."""

    pass

"""
Errors raised by bifix_lab.

Every failure is an exception; operations never hand back sentinel values.
Argument problems also derive from ValueError so callers catching the builtin
keep working.
"""

from typing import Optional


class BifixLabError(Exception):
    """Base class for all bifix_lab failures."""


class SymbolError(BifixLabError, ValueError):
    """Unknown, duplicate or malformed symbol."""


class MorphismError(BifixLabError, ValueError):
    """Bad morphism rules, non-prolongable seed or runaway growth."""


class StabilizationError(BifixLabError):
    """Factor sets of consecutive iterates never coincided."""


class HorizonError(BifixLabError):
    """The stored horizon is too small for the requested operation."""

    def __init__(self, operation: str, required: int, available: int) -> None:
        self.operation = operation
        self.required = required
        self.available = available
        super().__init__(
            f"{operation} needs horizon >= {required}, factor set has {available}"
        )


class WordNotInSetError(BifixLabError, ValueError):
    """The word is not a factor of the set."""


class BiextendabilityError(BifixLabError):
    """A word below the horizon has no two-sided extension."""

    def __init__(self, word: str) -> None:
        self.word = word
        super().__init__(f"word {word!r} has no two-sided extension below horizon")


class CodeError(BifixLabError, ValueError):
    """Code predicate or precondition violated."""


class GroupError(BifixLabError, ValueError):
    """Invalid free group query."""


class ReturnWordsError(BifixLabError, ValueError):
    """Return words cannot be computed or are not certified complete."""


class ConfigError(BifixLabError, ValueError):
    """Invalid lab or command-line configuration."""

    def __init__(self, message: str, key: Optional[str] = None) -> None:
        self.key = key
        super().__init__(message)

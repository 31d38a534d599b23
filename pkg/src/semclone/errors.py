"""Exception types shared across the package."""

from __future__ import annotations


class SemcloneError(Exception):
    """Base class for all errors raised by this package."""


class ConfigError(SemcloneError):
    """A configuration value is missing, malformed, or out of range."""


class InputError(SemcloneError):
    """An input file or directory is unreadable or malformed."""


class MiniSyntaxError(InputError):
    """Syntax error in a mini-language source file."""

    def __init__(self, message: str, line: int, column: int) -> None:
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class ResourceBudgetError(SemcloneError):
    """A configured resource budget (e.g. lattice node count) was exceeded."""


class InternalInvariantError(SemcloneError):
    """An internal data-structure invariant was violated; indicates a bug."""


class NoFrequentPatternsError(SemcloneError):
    """The graph database contains no frequent pattern at the given support."""

"""Exception hierarchy shared by all synckit modules."""

from __future__ import annotations


class SynckitError(Exception):
    """Base class for all errors raised by this package."""


class InputError(SynckitError, ValueError):
    """Invalid argument: out-of-range state or letter, malformed structure."""


class ParseError(InputError):
    """A document could not be parsed; carries a position when known."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


class ResourceCapError(SynckitError):
    """A computation was refused because it exceeds a configured cap."""


class IntegrityError(SynckitError):
    """A checkpoint file is corrupt or does not match the running job."""


class InternalConsistencyError(SynckitError):
    """An internal invariant failed; indicates a bug, not bad input."""

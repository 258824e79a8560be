"""Shared exception types."""
from __future__ import annotations


class GraspError(Exception):
    """Base class for all package errors."""


class GraphFormatError(GraspError):
    """Raised when a graph source cannot be parsed.

    Carries the 1-based line number and the offending source name so CLI
    and service layers can emit usable diagnostics.
    """

    def __init__(self, message: str, line: int | None = None, source: str | None = None):
        self.line = line
        self.source = source
        prefix = ""
        if source is not None:
            prefix += source
        if line is not None:
            prefix += f":{line}"
        super().__init__(f"{prefix}: {message}" if prefix else message)


class LabelError(GraspError):
    """Invalid label text (empty, whitespace, or reserved characters)."""


class QuerySyntaxError(GraspError):
    """Query text does not match the grammar. Carries a byte offset."""

    def __init__(self, message: str, offset: int):
        self.offset = offset
        super().__init__(f"at offset {offset}: {message}")


class UnsupportedFeatureError(GraspError):
    """A query feature the approximate engine cannot evaluate (filters)."""


class InputError(GraspError):
    """Invalid user-supplied argument (bad mode, unknown label, empty graph)."""

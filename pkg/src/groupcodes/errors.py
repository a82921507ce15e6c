"""Shared exception types for the groupcodes engine."""

from __future__ import annotations


class GroupcodesError(Exception):
    """Base class for all engine errors."""


class SchemaMismatch(GroupcodesError):
    """Operands belong to different groups or coordinate schemas."""


class CapExceeded(GroupcodesError):
    """An enumeration would produce more elements than the configured cap."""

    def __init__(self, needed: int, cap: int) -> None:
        super().__init__(f"enumeration needs {needed} elements, cap is {cap}")
        self.needed = needed
        self.cap = cap


class InternalInconsistency(GroupcodesError):
    """Two code paths that must agree disagreed.

    This always signals an engine bug, never a mathematical outcome of the
    instance under analysis.
    """


class PreconditionFailed(GroupcodesError):
    """An operation was invoked on inputs outside its stated preconditions."""


class ChainNotStrict(GroupcodesError):
    """An ascending chain of subgroups was not strictly increasing."""


class ParseError(GroupcodesError):
    """A textual subgroup description or report could not be parsed."""

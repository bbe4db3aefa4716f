"""Exception types shared across the package."""

from __future__ import annotations


class TfCousinsError(Exception):
    """Base class for all package errors."""


class Graph6Error(TfCousinsError, ValueError):
    """Malformed graph6 record."""


class CapacityError(TfCousinsError):
    """A group is too large to enumerate under the configured element bound."""


class TfPairError(TfCousinsError, ValueError):
    """A pair of bijections is malformed or fails the two-fold condition."""


class InvalidGuideError(TfCousinsError, ValueError):
    """A proposed guide is not a class-switching involutive automorphism.

    ``reason`` is one of ``"not-involution"``, ``"not-class-switching"``,
    ``"not-automorphism"`` or ``"degree"``.
    """

    def __init__(self, reason: str, message: str):
        super().__init__(message)
        self.reason = reason


class ConstructionError(TfCousinsError, ValueError):
    """Precondition of a graph construction is violated."""


class CatalogError(TfCousinsError, ValueError):
    """Catalog line does not match the record schema."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class IngestError(Graph6Error):
    """A graph6 record in a file failed to parse; ``line`` is 1-based."""

    def __init__(self, message: str, line: int, path: str | None = None):
        where = f"{path}:{line}" if path else f"line {line}"
        super().__init__(f"{where}: {message}")
        self.line = line
        self.path = path


class CensusError(TfCousinsError, ValueError):
    """Census input violates a precondition (for example mixed vertex counts)."""

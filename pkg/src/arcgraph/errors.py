"""Exception types shared across the package."""
from __future__ import annotations


class ArcgraphError(Exception):
    """Base class for all errors raised by this package."""


class SizeBudgetExceeded(ArcgraphError):
    """An enumeration or construction grew past its size budget.

    ``count`` holds the number of objects reached before giving up, when the
    enumeration got far enough to know it.
    """

    def __init__(self, message: str, count: int | None = None):
        super().__init__(message)
        self.count = count


class LoopPresent(ArcgraphError):
    """A coloring operation was asked to color a digraph with a loop."""


class MissingLabels(ArcgraphError):
    """A lattice operation needs subset labels that the poset does not carry."""


class NotSymmetric(ArcgraphError):
    """An operation restricted to undirected (symmetric) digraphs got a directed one."""


class RetractionInvalid(ArcgraphError):
    """Internal consistency failure: a computed retraction is not a retraction."""


class TableIncomplete(ArcgraphError):
    """A width value needed by the formula side is beyond the current budget."""


class CacheMismatch(ArcgraphError):
    """A recomputed width value disagrees with the persistent cache."""

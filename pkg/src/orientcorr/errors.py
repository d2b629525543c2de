"""Shared exception types."""


class GraphFormatError(ValueError):
    """Raised when a graph description (graph6 or edge list) cannot be parsed."""


class OverCapError(RuntimeError):
    """Raised when an exhaustive walk over orientations would exceed the edge cap."""

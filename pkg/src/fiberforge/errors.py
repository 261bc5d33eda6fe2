"""Exception hierarchy.

The CLI maps :class:`ValidationError` to exit status 2 and
:class:`ObstructionError` to exit status 3.
"""

from __future__ import annotations


class FiberforgeError(Exception):
    """Base class for all library errors."""


class ValidationError(FiberforgeError, ValueError):
    """Malformed or inadmissible input."""


class SurfaceError(ValidationError):
    """The complex is not a closed oriented surface."""


class NonClassicalError(ValidationError):
    """A necklace bundle does not yield a simplicial complex."""


class ObstructionError(FiberforgeError):
    """A requested bundle cannot be built for mathematical reasons."""

    def __init__(self, message: str, simplices=()):
        super().__init__(message)
        self.simplices = [tuple(s) for s in simplices]


class InternalError(FiberforgeError, RuntimeError):
    """An invariant that the construction guarantees was violated."""

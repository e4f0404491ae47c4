"""Exception types raised across the package."""

from __future__ import annotations


class ConfigurationError(ValueError):
    """Invalid root-system type or catalog entry (bad rank, unknown name, rank bound)."""


class NoDeltaError(ValueError):
    """Raised when the highest-root grading has no long root at level one.

    This happens exactly for the symplectic groups Sp(n), whose Wolf space is
    quaternionic projective space.
    """


class StructuralError(RuntimeError):
    """The highest-root grading came out malformed; indicates a bug, not bad input."""


class InvariantError(RuntimeError):
    """An internal consistency check failed while building structure constants."""

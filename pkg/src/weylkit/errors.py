"""Exception hierarchy.

Everything user-facing derives from WeylkitError (CLI exit code 1).
InternalInvariantError marks states the library promises are impossible;
the CLI maps it to exit code 2.
"""

from __future__ import annotations

__all__ = [
    "WeylkitError",
    "InternalInvariantError",
    "NotFiniteType",
    "SafetyBoundExceeded",
    "NotDivisible",
    "WordMismatch",
    "SolveFailed",
    "NotInvariant",
    "FreenessCheckFailed",
    "BoxExhausted",
    "SingularMatrix",
    "ParseError",
]


class WeylkitError(Exception):
    """Base class for domain errors raised on bad or unservable input."""


class InternalInvariantError(Exception):
    """A condition the library guarantees never happens did happen."""


class NotFiniteType(WeylkitError):
    """Cartan matrix is not of finite type (or not a Cartan matrix at all)."""


class SafetyBoundExceeded(WeylkitError):
    """An iteration cap was hit; signals a bug or out-of-scope input."""


class NotDivisible(WeylkitError):
    """Exact division has a nonzero remainder."""


class WordMismatch(InternalInvariantError):
    """Two reduced words of one group element gave different operator values."""


class SolveFailed(WeylkitError):
    """A linear system that must be solvable exactly was not."""


class NotInvariant(WeylkitError):
    """Operand was required to be Weyl-invariant but is not."""


class FreenessCheckFailed(WeylkitError):
    """A claimed module basis failed its freeness verification."""


class BoxExhausted(WeylkitError):
    """Decomposition support box was exhausted after the configured retries."""


class SingularMatrix(WeylkitError):
    """Integer matrix was required to be nonsingular but has determinant 0."""


class ParseError(WeylkitError):
    """Expression text does not match the grammar; message carries position."""

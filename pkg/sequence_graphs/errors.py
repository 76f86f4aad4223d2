"""Exceptions raised throughout `sequence_graphs`.

Every error derives from `SequenceGraphError` and carries the process exit code
the command line front end reports for it.
"""

from __future__ import annotations


class SequenceGraphError(Exception):
    """Base class for all package errors."""

    exit_code: int = 1


class InvalidParam(SequenceGraphError, ValueError):
    """A parameter is outside its admissible range."""

    exit_code = 2


class InvalidRange(InvalidParam):
    """A pair of sizes is not ordered as required (e.g. N >= M)."""


class InvalidSpecFile(InvalidParam):
    """An IET spec file or run-config file could not be interpreted."""


class OutOfRange(SequenceGraphError, IndexError):
    """A vertex or index lies outside ``{0..N-1}``."""

    exit_code = 2


class PrecisionInsufficient(SequenceGraphError, ArithmeticError):
    """Two high-precision terms are too close for the sort order to be trusted."""

    exit_code = 3


class DuplicateValues(SequenceGraphError, ValueError):
    """Two terms of a sequence compare equal."""

    exit_code = 3


class InvalidPermutation(InvalidParam):
    """A permutation is not a bijection on ``{1..k}``."""


class LengthsNotNormalized(InvalidParam):
    """Subinterval lengths do not sum to one within tolerance."""


class NonpositiveLength(InvalidParam):
    """A subinterval length is zero or negative."""


class OutOfDomain(SequenceGraphError, ValueError):
    """A point does not lie in ``[0, 1)`` (or is not dyadic for the odometer)."""

    exit_code = 2


class NoSuchEdge(SequenceGraphError, KeyError):
    """An edge identity is not present in the graph."""


class LoopContraction(SequenceGraphError, ValueError):
    """Contraction of a loop was requested."""


class DegenerateConnectionSet(SequenceGraphError, ValueError):
    """The circulant connection set ``{1, c}`` has ``c = +-1 (mod N)``."""


class DegenerateGraph(SequenceGraphError, ValueError):
    """A graph is too small for the requested construction."""


class InvalidRotation(SequenceGraphError, ValueError):
    """Dart bookkeeping of a rotation system is inconsistent."""


class InadmissibleSize(SequenceGraphError, ValueError):
    """N is not admissible for the requested embedding."""

    exit_code = 4


class EmbeddingVerificationFailed(SequenceGraphError, RuntimeError):
    """A constructed embedding did not pass its combinatorial verification."""

    exit_code = 5


class OrbitRevisit(SequenceGraphError, ValueError):
    """An orbit revisited a point within tolerance, so terms are not distinct."""

    exit_code = 6

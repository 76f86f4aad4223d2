"""
Sorted prefixes of a sequence: the sorting permutation and the successor function.

Vertices are 0-based throughout. For a prefix ``a_0, ..., a_{N-1}`` the
permutation ``pi`` orders the terms, ``a_{pi[0]} < ... < a_{pi[N-1]}``, and the
successor ``S(i) = pi[(pi_inv[i] + 1) % N]`` is the vertex following ``i`` in
sorted order.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import TYPE_CHECKING

from sequence_graphs.errors import (
    DuplicateValues,
    InvalidParam,
    OutOfRange,
    PrecisionInsufficient,
)
from sequence_graphs.sequences.values import ValueKind

if TYPE_CHECKING:
    from collections.abc import Sequence

    from gmpy2 import mpfr

    from sequence_graphs.sequences.values import SeqValue

module_logger = logging.getLogger(__name__)


def _invert(pi: Sequence[int]) -> tuple[int, ...]:
    pi_inv = [0] * len(pi)
    for position, vertex in enumerate(pi):
        pi_inv[vertex] = position
    return tuple(pi_inv)


def sort_permutation(
    terms: Sequence[SeqValue],
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Compute the permutation sorting `terms` ascending, and its inverse.

    Parameters
    ----------
    terms : Sequence[SeqValue]
        Pairwise distinct terms of a single kind.

    Returns
    -------
    tuple[tuple[int, ...], tuple[int, ...]]
        ``(pi, pi_inv)`` with ``terms[pi[0]] < ... < terms[pi[-1]]``.

    Raises
    ------
    DuplicateValues
        If two terms compare equal.
    """
    kinds = {term.kind for term in terms}
    if len(kinds) > 1:
        msg = "Cannot sort a mixture of rational and real terms."
        raise InvalidParam(msg)

    pi = sorted(range(len(terms)), key=lambda i: terms[i].value)
    for left, right in zip(pi, pi[1:], strict=False):
        if terms[left].value == terms[right].value:
            msg = f"Terms {left} and {right} are equal ({terms[left]})."
            raise DuplicateValues(msg)
    return tuple(pi), _invert(pi)


def check_separation(
    terms: Sequence[SeqValue],
    pi: Sequence[int],
    threshold: mpfr,
) -> mpfr | None:
    """Check that sorted-adjacent real terms are at least `threshold` apart.

    Returns
    -------
    mpfr | None
        The smallest adjacent gap, None for fewer than two terms.

    Raises
    ------
    PrecisionInsufficient
        If some adjacent pair is closer than `threshold`.
    """
    smallest = None
    for left, right in zip(pi, pi[1:], strict=False):
        gap = terms[right].value - terms[left].value
        if gap < threshold:
            msg = (
                f"Terms {left} and {right} differ by {float(gap):.3e}, below the "
                f"separation threshold {float(threshold):.3e}; raise the precision."
            )
            raise PrecisionInsufficient(msg)
        if smallest is None or gap < smallest:
            smallest = gap
    return smallest


@dataclass(frozen=True)
class SortedSequence:
    """The first ``N`` terms of a sequence together with their sorting permutation.

    Instances are immutable and hold pairwise distinct terms; build them with
    `SortedSequence.from_terms`.
    """

    terms: tuple[SeqValue, ...]
    pi: tuple[int, ...]
    pi_inv: tuple[int, ...]

    @classmethod
    def from_terms(cls, terms: Sequence[SeqValue]) -> SortedSequence:
        """Sort `terms` and wrap them.

        Raises
        ------
        InvalidParam
            If `terms` is empty.
        DuplicateValues
            If two terms compare equal.
        """
        if len(terms) == 0:
            msg = "A sorted sequence needs at least one term."
            raise InvalidParam(msg)
        pi, pi_inv = sort_permutation(terms)
        return cls(tuple(terms), pi, pi_inv)

    @property
    def N(self) -> int:
        return len(self.terms)

    @property
    def kind(self) -> ValueKind:
        return self.terms[0].kind

    def successor(self, i: int) -> int:
        """See `successor`."""
        return successor(self, i)

    def successor_map(self) -> tuple[int, ...]:
        """The successor function as a tuple ``S[i]``."""
        n = self.N
        s = [0] * n
        for position, vertex in enumerate(self.pi):
            s[vertex] = self.pi[(position + 1) % n]
        return tuple(s)

    def prefix(self, n: int) -> SortedSequence:
        """The sorted sequence of the first `n` terms.

        The restriction of ``pi`` to indices below `n` is still sorted, so no
        comparisons are made.

        Raises
        ------
        OutOfRange
            If `n` is not in ``1..N``.
        """
        if not 1 <= n <= self.N:
            msg = f"Prefix length {n} outside 1..{self.N}."
            raise OutOfRange(msg)
        if n == self.N:
            return self
        pi = tuple(vertex for vertex in self.pi if vertex < n)
        return SortedSequence(self.terms[:n], pi, _invert(pi))


def successor(seq: SortedSequence, i: int) -> int:
    """The vertex following `i` in sorted order, ``S(i) = pi(pi_inv(i) + 1 mod N)``.

    Raises
    ------
    OutOfRange
        If `i` is not a vertex of `seq`.
    """
    n = seq.N
    if not 0 <= i < n:
        msg = f"Vertex {i} outside 0..{n - 1}."
        raise OutOfRange(msg)
    return seq.pi[(seq.pi_inv[i] + 1) % n]


def predecessor(seq: SortedSequence, i: int) -> int:
    """Inverse of `successor`."""
    n = seq.N
    if not 0 <= i < n:
        msg = f"Vertex {i} outside 0..{n - 1}."
        raise OutOfRange(msg)
    return seq.pi[(seq.pi_inv[i] - 1) % n]

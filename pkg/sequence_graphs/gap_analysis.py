"""
Gap structure of sorting permutations.

For a Kronecker prefix the index gaps ``S(i) - i`` take at most three values,

    pi(1)               for 0 <= i < N - pi(1)
    pi(1) - pi(N-1)     for N - pi(1) <= i < pi(N-1)
    -pi(N-1)            for pi(N-1) <= i < N

and when ``N = pi(1) + pi(N-1)`` the middle case is empty, every ``Cpi`` edge
joins vertices ``pi(1)`` apart mod ``N``, and the sequence graph is the
circulant ``C_N({1, pi(1)})``.
"""

from __future__ import annotations

import logging
import timeit
from dataclasses import dataclass
from itertools import groupby
from typing import TYPE_CHECKING, Any

from sequence_graphs.errors import InvalidParam
from sequence_graphs.precision_utils import separation_threshold, working_precision
from sequence_graphs.sequences import (
    KroneckerParams,
    SortedSequence,
    ValueKind,
    kronecker_prefix,
)

if TYPE_CHECKING:
    from fractions import Fraction

    from gmpy2 import mpfr

    from sequence_graphs.graphs import SequenceGraph

module_logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GapRun:
    """A maximal index range ``[lo, hi)`` on which ``S(i) - i`` equals `value`."""

    value: int
    lo: int
    hi: int


@dataclass(frozen=True)
class GapProfile:
    N: int
    gaps: tuple[GapRun, ...]
    pi1: int
    piN1: int

    @property
    def values(self) -> tuple[int, ...]:
        """Distinct gap values in order of first appearance."""
        return tuple(dict.fromkeys(run.value for run in self.gaps))

    @property
    def distinct_count(self) -> int:
        return len(self.values)

    def to_json(self) -> dict[str, Any]:
        return {
            "N": self.N,
            "distinct_count": self.distinct_count,
            "gaps": list(self.values),
            "pi1": self.pi1,
            "piN1": self.piN1,
            "runs": [
                {"value": run.value, "lo": run.lo, "hi": run.hi} for run in self.gaps
            ],
        }


def _index_gaps(seq: SortedSequence) -> list[int]:
    return [s - i for i, s in enumerate(seq.successor_map())]


def _check_size(seq: SortedSequence) -> None:
    if seq.N < 2:  # noqa: PLR2004
        msg = f"Gap analysis needs at least 2 terms, got {seq.N}."
        raise InvalidParam(msg)


def gap_profile(seq: SortedSequence) -> GapProfile:
    """Group ``S(i) - i`` into maximal runs of equal value.

    Raises
    ------
    InvalidParam
        If the sequence has fewer than two terms.
    """
    _check_size(seq)
    runs = []
    lo = 0
    for value, group in groupby(_index_gaps(seq)):
        hi = lo + len(list(group))
        runs.append(GapRun(value, lo, hi))
        lo = hi
    return GapProfile(seq.N, tuple(runs), seq.pi[1], seq.pi[-1])


def gap_count(seq: SortedSequence) -> int:
    """Number of distinct index gaps ``S(i) - i``."""
    return len(set(_index_gaps(seq)))


def verify_three_gap(seq: SortedSequence) -> bool:
    """Check every index gap against the three-case formula in ``pi(1)`` and
    ``pi(N-1)``.

    A single term is vacuously fine. Each index must fall into exactly one of
    the three ranges, with the gap that range predicts.
    """
    n = seq.N
    if n < 2:  # noqa: PLR2004
        return True
    p1, pn = seq.pi[1], seq.pi[-1]
    cases = ((0, n - p1, p1), (n - p1, pn, p1 - pn), (pn, n, -pn))
    for i, gap in enumerate(_index_gaps(seq)):
        predicted = [value for lo, hi, value in cases if lo <= i < hi]
        if predicted != [gap]:
            return False
    return True


def is_nice_N(seq: SortedSequence) -> bool:
    """``N = pi(1) + pi(N-1)``."""
    _check_size(seq)
    return seq.N == seq.pi[1] + seq.pi[-1]


def nice_N_scan(theta: KroneckerParams | str, N_max: int) -> list[int]:
    """All nice ``N`` in ``2..N_max``, ascending.

    One prefix of length `N_max` is sorted; for shorter prefixes ``pi(1)`` and
    ``pi(N-1)`` are tracked as running second-minimum and maximum by rank.

    Raises
    ------
    InvalidParam
        If `N_max` < 2.
    PrecisionInsufficient
        Propagated from prefix generation.
    """
    if N_max < 2:  # noqa: PLR2004
        msg = f"N_max must be at least 2, got {N_max}."
        raise InvalidParam(msg)
    params = KroneckerParams.from_text(theta) if isinstance(theta, str) else theta

    st_time: float = timeit.default_timer()
    seq = kronecker_prefix(params, N_max)
    rank = seq.pi_inv

    lowest, second = sorted((0, 1), key=rank.__getitem__)
    highest = max((0, 1), key=rank.__getitem__)
    nice = [2] if second + highest == 2 else []  # noqa: PLR2004
    for n in range(2, N_max):
        if rank[n] < rank[lowest]:
            lowest, second = n, lowest
        elif rank[n] < rank[second]:
            second = n
        if rank[n] > rank[highest]:
            highest = n
        if n + 1 == second + highest:
            nice.append(n + 1)

    elapsed: float = timeit.default_timer() - st_time
    module_logger.info("Scanned N <= %d for nice N in %.3fs", N_max, elapsed)
    return nice


def _insertion_neighbours(seq: SortedSequence) -> tuple[list[int], list[int]]:
    """For every ``n``, the sorted neighbours of term ``n`` among terms ``0..n``.

    Terms are unlinked from a circular list in sorted order, last index first,
    so each one sees exactly the terms that precede it.
    """
    n = seq.N
    nxt = [0] * n
    prv = [0] * n
    for rank, index in enumerate(seq.pi):
        nxt[index] = seq.pi[(rank + 1) % n]
        prv[index] = seq.pi[rank - 1]

    pred = [0] * n
    succ = [0] * n
    for index in range(n - 1, 0, -1):
        p, q = prv[index], nxt[index]
        pred[index], succ[index] = p, q
        nxt[p], prv[q] = q, p
    return pred, succ


def _bump(counts: dict[int, int], gap: int, by: int) -> None:
    counts[gap] = counts.get(gap, 0) + by
    if counts[gap] == 0:
        del counts[gap]


def three_gap_sweep(theta: KroneckerParams | str, N_max: int) -> list[int]:
    """Every ``N`` in ``2..N_max`` whose index gaps disagree with the three-gap
    counts, ascending; empty when the theorem holds throughout.

    At size ``N`` the gap ``pi(1)`` must occur ``N - pi(1)`` times,
    ``pi(1) - pi(N-1)`` must occur ``pi(N-1) - N + pi(1)`` times and
    ``-pi(N-1)`` must occur ``N - pi(N-1)`` times. Terms are inserted one at a
    time, and each insertion changes the successor of one term, so every step
    updates the gap counts in constant time.

    Raises
    ------
    InvalidParam
        If `N_max` < 2.
    PrecisionInsufficient
        Propagated from prefix generation.
    """
    if N_max < 2:  # noqa: PLR2004
        msg = f"N_max must be at least 2, got {N_max}."
        raise InvalidParam(msg)
    params = KroneckerParams.from_text(theta) if isinstance(theta, str) else theta

    st_time: float = timeit.default_timer()
    seq = kronecker_prefix(params, N_max)
    rank = seq.pi_inv
    pred, succ = _insertion_neighbours(seq)

    counts = {0: 1}
    lowest = second = highest = 0
    failures = []
    for n in range(1, N_max):
        p, q = pred[n], succ[n]
        _bump(counts, q - p, -1)
        _bump(counts, n - p, 1)
        _bump(counts, q - n, 1)

        if rank[n] < rank[lowest]:
            lowest, second = n, lowest
        elif second == lowest or rank[n] < rank[second]:
            second = n
        if rank[n] > rank[highest]:
            highest = n

        size = n + 1
        predicted = {
            second: size - second,
            second - highest: highest - size + second,
            -highest: size - highest,
        }
        if counts != {gap: k for gap, k in predicted.items() if k != 0}:
            failures.append(size)

    elapsed: float = timeit.default_timer() - st_time
    module_logger.info("Swept N <= %d for three gaps in %.3fs", N_max, elapsed)
    if failures:
        module_logger.warning("Three-gap counts fail for %d sizes", len(failures))
    return failures


def next_nice_N(theta: KroneckerParams | str, n: int) -> int:
    """The smallest nice ``M > n``, scanning ever longer prefixes."""
    params = KroneckerParams.from_text(theta) if isinstance(theta, str) else theta
    N_max = max(2 * n, 16)
    while True:
        larger = [M for M in nice_N_scan(params, N_max) if M > n]
        if larger:
            return larger[0]
        N_max *= 2


def growth_ratios(ns: list[int]) -> list[float]:
    """Ratios of consecutive entries of an ascending list."""
    return [b / a for a, b in zip(ns, ns[1:], strict=False)]


@dataclass(frozen=True)
class ConnectionSet:
    """Connection set ``{1, c}`` of a circulant sequence graph.

    `degenerate` marks ``c = +-1 (mod N)``, where the two cycles share edges
    and ``C_N({1, c})`` has every edge doubled.
    """

    N: int
    c: int
    connections: tuple[int, ...]
    degenerate: bool

    @property
    def multiplicity(self) -> int:
        return 2 if self.degenerate else 1

    def to_json(self) -> dict[str, Any]:
        return {
            "connections": list(self.connections),
            "degenerate": self.degenerate,
            "multiplicity": self.multiplicity,
        }


def circulant_check(g: SequenceGraph, seq: SortedSequence) -> ConnectionSet | None:
    """The connection set ``{1, pi(1)}`` if every ``Cpi`` edge of `g` joins
    vertices ``pi(1)`` apart mod ``N``, otherwise None."""
    n = seq.N
    if n < 2:  # noqa: PLR2004
        return None
    c = seq.pi[1]
    if any((v - u - c) % n for u, v in g.cpi_edges):
        return None
    return ConnectionSet(
        n,
        c,
        tuple(sorted({1, c})),
        degenerate=c % n in (1, n - 1),
    )


def _circular_distances(seq: SortedSequence) -> list[Fraction | mpfr]:
    distances = []
    for i, s in enumerate(seq.successor_map()):
        distance = seq.terms[s].value - seq.terms[i].value
        distances.append(distance + 1 if distance < 0 else distance)
    return sorted(distances)


def value_gaps(seq: SortedSequence) -> tuple[Fraction | mpfr, ...]:
    """Distinct circular distances ``a_S(i) - a_i mod 1``, ascending.

    Real distances are computed at the precision of the terms; those closer than
    the separation threshold count as one.
    """
    if seq.kind is ValueKind.RATIONAL:
        return tuple(dict.fromkeys(_circular_distances(seq)))

    precision_bits = seq.terms[0].precision_bits
    threshold = separation_threshold(precision_bits)
    with working_precision(precision_bits):
        distances = _circular_distances(seq)
        distinct = [distances[0]]
        for distance in distances[1:]:
            if distance - distinct[-1] >= threshold:
                distinct.append(distance)
    return tuple(distinct)

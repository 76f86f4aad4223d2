"""Orbits of interval maps and checks that a sequence evolves by a given map."""

from __future__ import annotations

import logging
import timeit
from bisect import bisect_left, insort
from dataclasses import dataclass
from fractions import Fraction
from typing import Protocol

from gmpy2 import mpfr

from sequence_graphs.errors import InvalidParam, OrbitRevisit, SequenceGraphError
from sequence_graphs.iet.transformation import IETConvention, IETSpec
from sequence_graphs.precision_utils import (
    DEFAULT_PRECISION_BITS,
    separation_threshold,
    to_mpfr,
)
from sequence_graphs.sequences import (
    SeqValue,
    SortedSequence,
    ValueKind,
    check_separation,
)

module_logger = logging.getLogger(__name__)

Point = Fraction | mpfr


class IntervalMap(Protocol):
    """Anything that maps ``[0, 1)`` into itself: an `IETSpec` or the odometer."""

    def __call__(self, x: Point) -> Point:
        ...


@dataclass(frozen=True)
class OrbitReport:
    """The first points of an orbit and where, if anywhere, it came back.

    ``revisit_index`` is the first index whose point lies within the tolerance
    of an earlier point; ``distinct_ok`` is True when there is none.
    """

    points: tuple[Point, ...]
    revisit_index: int | None
    tolerance: Point

    @property
    def distinct_ok(self) -> bool:
        return self.revisit_index is None

    @property
    def N(self) -> int:
        return len(self.points)


def default_tolerance(T: IntervalMap) -> Point:
    """``2^(-p/2)`` for an IET at precision ``p``, zero (exact) otherwise."""
    if isinstance(T, IETSpec):
        return separation_threshold(T.precision_bits)
    return Fraction(0)


def _is_close(a: Point, b: Point, tolerance: Point) -> bool:
    if tolerance == 0:
        return a == b
    return abs(a - b) < tolerance


def iet_orbit(
    T: IntervalMap,
    x0: Point,
    N: int,
    tolerance: Point | None = None,
) -> OrbitReport:
    """Iterate `T` from `x0`, ``points[i+1] = T(points[i])``, for `N` points.

    Parameters
    ----------
    T : IntervalMap
        The map to iterate.
    x0 : Point
        Starting point in ``[0, 1)``.
    N : int
        Number of points, including `x0`.
    tolerance : Point | None, optional
        Points closer than this count as a revisit. Defaults to
        `default_tolerance`.

    Returns
    -------
    OrbitReport
        All `N` points and the first revisit index, if any.

    Raises
    ------
    InvalidParam
        If `N` is not positive.
    OutOfDomain
        Propagated from `T`.
    """
    if N < 1:
        msg = f"N must be at least 1, got {N}."
        raise InvalidParam(msg)
    if isinstance(T, IETSpec):
        x0 = to_mpfr(x0, T.precision_bits)
    if tolerance is None:
        tolerance = default_tolerance(T)

    st_time: float = timeit.default_timer()
    points = [x0]
    seen = [x0]
    revisit_index = None
    for i in range(1, N):
        point = T(points[-1])
        points.append(point)
        if revisit_index is None:
            position = bisect_left(seen, point)
            neighbours = seen[max(position - 1, 0) : position + 1]
            if any(_is_close(point, other, tolerance) for other in neighbours):
                revisit_index = i
                module_logger.debug("Orbit revisited an earlier point at index %d", i)
            insort(seen, point)

    elapsed: float = timeit.default_timer() - st_time
    module_logger.info("Generated %d orbit points in %.3fs", N, elapsed)
    return OrbitReport(tuple(points), revisit_index, tolerance)


def _evolves(seq: SortedSequence, T: IntervalMap, tolerance: Point) -> bool:
    values = [term.value for term in seq.terms]
    try:
        return all(
            _is_close(T(current), following, tolerance)
            for current, following in zip(values, values[1:], strict=False)
        )
    except SequenceGraphError as e:
        module_logger.debug("Evolution check stopped: %s", e)
        return False


def matching_convention(
    seq: SortedSequence,
    T: IETSpec,
    tolerance: Point | None = None,
) -> IETConvention | None:
    """The convention under which `seq` evolves by `T`, trying `T`'s own first."""
    if tolerance is None:
        tolerance = default_tolerance(T)
    for convention in (T.convention, T.convention.other):
        if _evolves(seq, T.with_convention(convention), tolerance):
            module_logger.debug("Sequence evolves under the %s convention", convention.value)
            return convention
    return None


def verify_evolution(
    seq: SortedSequence,
    T: IntervalMap,
    tolerance: Point | None = None,
    *,
    any_convention: bool = True,
) -> bool:
    """Check ``|T(a_i) - a_{i+1}| < tolerance`` for all consecutive terms.

    Parameters
    ----------
    seq : SortedSequence
        The sequence, in index order.
    T : IntervalMap
        The candidate map.
    tolerance : Point | None, optional
        Defaults to `default_tolerance`; zero means exact equality.
    any_convention : bool, default=True
        For an `IETSpec`, accept either orientation convention.

    Returns
    -------
    bool
        False on any mismatch, including points outside the map's domain.
    """
    if tolerance is None:
        tolerance = default_tolerance(T)
    if isinstance(T, IETSpec) and any_convention:
        return matching_convention(seq, T, tolerance) is not None
    return _evolves(seq, T, tolerance)


def _to_value(point: Point, precision_bits: int) -> SeqValue:
    if isinstance(point, Fraction):
        return SeqValue.rational(point)
    return SeqValue.real(point, precision_bits)


def orbit_sequence(
    report: OrbitReport,
    precision_bits: int = DEFAULT_PRECISION_BITS,
) -> SortedSequence:
    """Sort the points of an orbit.

    Raises
    ------
    OrbitRevisit
        If the orbit came back within tolerance, so the terms are not distinct.
    PrecisionInsufficient
        If real points are too close to be ordered reliably.
    """
    if not report.distinct_ok:
        msg = (
            f"Orbit point {report.revisit_index} lies within {report.tolerance} "
            "of an earlier point."
        )
        raise OrbitRevisit(msg)
    seq = SortedSequence.from_terms([_to_value(p, precision_bits) for p in report.points])
    if seq.kind is ValueKind.REAL:
        check_separation(seq.terms, seq.pi, separation_threshold(precision_bits))
    return seq


def orbit_prefix(T: IntervalMap, N: int, x0: Point | None = None) -> SortedSequence:
    """The sorted orbit prefix of length `N` starting at `x0` (default 0)."""
    if x0 is None:
        x0 = Fraction(0)
    precision_bits = T.precision_bits if isinstance(T, IETSpec) else DEFAULT_PRECISION_BITS
    return orbit_sequence(iet_orbit(T, x0, N), precision_bits)

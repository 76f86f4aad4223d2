"""
Explicit embedding of the binary van der Corput graph ``G_{4^m}`` into the
Chamanara surface.

Vertex ``i`` sits at the lattice point ``psi(i) = (b_1(i), r(b_0(i)))`` of a
``2^m x 2^m`` grid drawn in a square with corners at ``delta`` and
``2^m + delta``, ``delta = -1/2 - epsilon``. Edges are routed in five cases:

1. ``Cpi`` edges with ``b_0`` not all ones go one unit up.
2. ``C1`` edges with ``b_1`` not all ones go one unit right.
3. Other ``Cpi`` edges leave the top row through ``h_k``, ``k`` the first zero
   of ``b_1`` from the left, and come back up from the bottom side.
4. Other ``C1`` edges leave the right column through ``v_k``, ``k`` the first
   zero of ``r(b_0)`` from the left, and come back in from the left side.
5. The two edges ``(N-1, 0)`` leave the corner along the grid for a quarter
   unit, bend to ``h_{m+1}`` or ``v_{m+1}``, and arrive at the origin from the
   opposite side.

All coordinates are exact dyadic `Fraction` values.
"""

from __future__ import annotations

import logging
import timeit
from dataclasses import dataclass
from enum import IntEnum
from fractions import Fraction
from typing import TYPE_CHECKING, Any

from sequence_graphs.bit_utils import (
    first_zero_from_left,
    is_all_ones,
    reverse_bits,
    reverse_int,
    split_b0_b1,
)
from sequence_graphs.embedding.segments import Axis, segment_map
from sequence_graphs.errors import InadmissibleSize, InvalidParam
from sequence_graphs.graphs import CycleTag, EdgeId, build_graph
from sequence_graphs.sequences import vdc_prefix

if TYPE_CHECKING:
    from collections.abc import Iterator

module_logger = logging.getLogger(__name__)

Point = tuple[Fraction, Fraction]
Polyline = tuple[Point, ...]

QUARTER = Fraction(1, 4)
HALF = Fraction(1, 2)


class RouteCase(IntEnum):
    VERTICAL_INNER = 1
    HORIZONTAL_INNER = 2
    TOP_ROW = 3
    RIGHT_COLUMN = 4
    REROUTE = 5


@dataclass(frozen=True)
class Crossing:
    """Passage through an identified segment from `entry` to `exit`."""

    segment: str
    entry: Point
    exit: Point


@dataclass(frozen=True)
class EdgeRoute:
    """A drawn edge: polylines joined by segment crossings.

    ``len(legs) == len(crossings) + 1``; crossing ``j`` leaves from the last
    point of leg ``j`` and arrives at the first point of leg ``j + 1``.
    """

    edge: EdgeId
    u: int
    v: int
    case: RouteCase
    legs: tuple[Polyline, ...]
    crossings: tuple[Crossing, ...] = ()

    @property
    def start(self) -> Point:
        return self.legs[0][0]

    @property
    def end(self) -> Point:
        return self.legs[-1][-1]

    def pieces(self) -> Iterator[tuple[Point, Point]]:
        """Straight pieces of all legs."""
        for leg in self.legs:
            yield from zip(leg, leg[1:], strict=False)

    def to_json(self) -> dict[str, Any]:
        return {
            "edge": {"cycle": str(self.edge.tag), "index": self.edge.index},
            "u": self.u,
            "v": self.v,
            "case": int(self.case),
            "legs": [[_point_json(p) for p in leg] for leg in self.legs],
            "crossings": [
                {
                    "segment": c.segment,
                    "entry": _point_json(c.entry),
                    "exit": _point_json(c.exit),
                }
                for c in self.crossings
            ],
        }


def _coordinate_json(t: Fraction) -> int | str:
    return t.numerator if t.denominator == 1 else str(t)


def _point_json(p: Point) -> list[int | str]:
    return [_coordinate_json(p[0]), _coordinate_json(p[1])]


@dataclass(frozen=True)
class ChamanaraEmbedding:
    m: int
    epsilon: Fraction
    delta: Fraction
    points: tuple[tuple[int, int], ...]
    routes: tuple[EdgeRoute, ...]

    @property
    def N(self) -> int:
        return len(self.points)

    @property
    def side_length(self) -> int:
        return 2**self.m

    @property
    def reroutes(self) -> tuple[EdgeRoute, ...]:
        return tuple(r for r in self.routes if r.case is RouteCase.REROUTE)

    def case_counts(self) -> dict[int, int]:
        counts = dict.fromkeys(map(int, RouteCase), 0)
        for route in self.routes:
            counts[int(route.case)] += 1
        return counts

    def to_json(self) -> dict[str, Any]:
        return {
            "m": self.m,
            "n": self.N,
            "epsilon": str(self.epsilon),
            "delta": str(self.delta),
            "points": [list(p) for p in self.points],
            "routes": [route.to_json() for route in self.routes],
            "case_counts": {str(k): v for k, v in self.case_counts().items()},
        }


def chamanara_frame(m: int) -> tuple[Fraction, Fraction]:
    """``(epsilon, delta)`` with ``epsilon = 1/(8 * 2^m)``, ``delta = -1/2 - epsilon``."""
    epsilon = Fraction(1, 8 * 2**m)
    return epsilon, -HALF - epsilon


def psi(i: int, m: int) -> tuple[int, int]:
    """Lattice position ``(b_1(i), r(b_0(i)))`` of vertex `i`."""
    side = 2**m
    return i % side, reverse_int(i // side, m)


def scale_for(n: int) -> int:
    """The `m` with ``4^m = n``.

    Raises
    ------
    InadmissibleSize
        If `n` is not a power of four at least 4.
    """
    m = (n.bit_length() - 1) // 2
    if m < 1 or 4**m != n:
        msg = f"N = {n} is not a power of 4; the square embedding needs N = 4^m."
        raise InadmissibleSize(msg)
    return m


def covering_scale(n: int) -> int:
    """The smallest `m` >= 1 with ``4^m >= n``."""
    m = 1
    while 4**m < n:
        m += 1
    return m


class _Router:
    """Routes edges of ``G_{4^m}`` on the square."""

    def __init__(self, m: int) -> None:
        self.m = m
        self.n = 4**m
        self.side = 2**m
        self.epsilon, self.delta = chamanara_frame(m)
        self.top = self.delta + self.side
        self.corner = Fraction(self.side - 1)

    def point(self, i: int) -> Point:
        x, y = psi(i, self.m)
        return Fraction(x), Fraction(y)

    def c1(self, edge: EdgeId, u: int, v: int) -> EdgeRoute:
        if u == self.n - 1:
            return self._reroute_c1(edge, u, v)
        b0, b1 = split_b0_b1(u, self.m)
        x, y = self.point(u)
        if not is_all_ones(b1):
            legs = (((x, y), (x + 1, y)),)
            return EdgeRoute(edge, u, v, RouteCase.HORIZONTAL_INNER, legs)

        k = first_zero_from_left(reverse_bits(b0))
        segment = segment_map(self.m, self.delta, k, Axis.VERTICAL)
        y_exit = segment.image(y)
        entry, exit_ = (self.top, y), (self.delta, y_exit)
        legs = (((x, y), entry), (exit_, (Fraction(0), y_exit)))
        crossing = Crossing(segment.name, entry, exit_)
        return EdgeRoute(edge, u, v, RouteCase.RIGHT_COLUMN, legs, (crossing,))

    def cpi(self, edge: EdgeId, u: int, v: int) -> EdgeRoute:
        if u == self.n - 1:
            return self._reroute_cpi(edge, u, v)
        b0, b1 = split_b0_b1(u, self.m)
        x, y = self.point(u)
        if not is_all_ones(b0):
            legs = (((x, y), (x, y + 1)),)
            return EdgeRoute(edge, u, v, RouteCase.VERTICAL_INNER, legs)

        k = first_zero_from_left(b1)
        segment = segment_map(self.m, self.delta, k, Axis.HORIZONTAL)
        x_exit = segment.image(x)
        entry, exit_ = (x, self.top), (x_exit, self.delta)
        legs = (((x, y), entry), (exit_, (x_exit, Fraction(0))))
        crossing = Crossing(segment.name, entry, exit_)
        return EdgeRoute(edge, u, v, RouteCase.TOP_ROW, legs, (crossing,))

    def _reroute_cpi(self, edge: EdgeId, u: int, v: int) -> EdgeRoute:
        segment = segment_map(self.m, self.delta, self.m + 1, Axis.HORIZONTAL)
        c = self.corner
        entry = (c - HALF, self.top)
        exit_ = (segment.image(entry[0]), self.delta)
        legs = (
            ((c, c), (c, c + QUARTER), entry),
            (exit_, (exit_[0], Fraction(0))),
        )
        crossing = Crossing(segment.name, entry, exit_)
        return EdgeRoute(edge, u, v, RouteCase.REROUTE, legs, (crossing,))

    def _reroute_c1(self, edge: EdgeId, u: int, v: int) -> EdgeRoute:
        segment = segment_map(self.m, self.delta, self.m + 1, Axis.VERTICAL)
        c = self.corner
        entry = (self.top, c - HALF)
        exit_ = (self.delta, segment.image(entry[1]))
        legs = (
            ((c, c), (c + QUARTER, c), entry),
            (exit_, (Fraction(0), exit_[1])),
        )
        crossing = Crossing(segment.name, entry, exit_)
        return EdgeRoute(edge, u, v, RouteCase.REROUTE, legs, (crossing,))


def chamanara_embed(m: int) -> ChamanaraEmbedding:
    """Embed the van der Corput graph ``G_{4^m}`` into the Chamanara surface.

    Parameters
    ----------
    m : int
        Scale exponent; the graph has ``4^m`` vertices on a ``2^m`` grid.

    Returns
    -------
    ChamanaraEmbedding
        Lattice points and one route per edge, ``C1`` edges first.

    Raises
    ------
    InvalidParam
        If `m` < 1.
    """
    if m < 1:
        msg = f"Scale exponent m must be at least 1, got {m}."
        raise InvalidParam(msg)

    module_logger.debug("Embedding the van der Corput graph at m=%d", m)
    st_time: float = timeit.default_timer()

    router = _Router(m)
    graph = build_graph(vdc_prefix(2, router.n))
    routes = [
        router.c1(edge, u, v) if edge.tag == CycleTag.C1 else router.cpi(edge, u, v)
        for edge, u, v in graph.edges()
    ]
    points = tuple(psi(i, m) for i in range(router.n))

    elapsed: float = timeit.default_timer() - st_time
    module_logger.info("Routed %d edges at m=%d in %.3fs", len(routes), m, elapsed)
    return ChamanaraEmbedding(m, router.epsilon, router.delta, points, tuple(routes))

"""
Exact combinatorial verification of a Chamanara embedding.

The checks are

* ``segment-reuse``: no stretch of a grid line carries two routes;
* ``lattice``: routes run on integer grid lines, start and end at their
  endpoints' lattice points, and touch no other lattice point;
* ``crossing``: every segment crossing leaves from one glued side and arrives
  at the identified point of the partner side, and routes stay in the square;
* ``coverage``: there is exactly one route per edge of ``G_N``, with that
  edge's endpoints;
* ``reroute``: exactly the two ``(N-1, 0)`` edges are rerouted, they stay close
  to the corners, and their slanted pieces meet no other route.
"""

from __future__ import annotations

import logging
import math
import timeit
from collections import Counter, defaultdict
from dataclasses import dataclass
from enum import StrEnum
from fractions import Fraction
from typing import TYPE_CHECKING, Any

from sequence_graphs.embedding.chamanara import HALF, RouteCase
from sequence_graphs.embedding.segments import Axis, parse_segment_name, segment_map
from sequence_graphs.errors import InvalidParam
from sequence_graphs.graphs import build_graph
from sequence_graphs.sequences import vdc_prefix

if TYPE_CHECKING:
    from collections.abc import Iterator

    from sequence_graphs.embedding.chamanara import (
        ChamanaraEmbedding,
        Crossing,
        EdgeRoute,
        Point,
    )
    from sequence_graphs.graphs import EdgeId

module_logger = logging.getLogger(__name__)

REROUTE_COUNT = 2


class Check(StrEnum):
    SEGMENT_REUSE = "segment-reuse"
    LATTICE = "lattice"
    CROSSING = "crossing"
    REROUTE = "reroute"
    COVERAGE = "coverage"


@dataclass(frozen=True)
class Violation:
    check: Check
    edges: tuple[EdgeId, ...]
    message: str

    def to_json(self) -> dict[str, Any]:
        return {
            "check": str(self.check),
            "edges": [str(edge) for edge in self.edges],
            "message": self.message,
        }


@dataclass(frozen=True)
class EmbeddingCertificate:
    """Outcome of `verify_embedding`; truthy when there are no violations."""

    routes_checked: int
    violations: tuple[Violation, ...] = ()

    @property
    def verified(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.verified

    def checks_failed(self) -> set[Check]:
        return {violation.check for violation in self.violations}

    def to_json(self) -> dict[str, Any]:
        return {
            "verified": self.verified,
            "routes_checked": self.routes_checked,
            "violations": [violation.to_json() for violation in self.violations],
        }


def _is_integer(t: Fraction) -> bool:
    return Fraction(t).denominator == 1


def _axis_line(a: Point, b: Point) -> tuple[str, Fraction, Fraction, Fraction] | None:
    """``(orientation, fixed coordinate, lo, hi)`` of an axis-aligned piece."""
    if a[0] == b[0]:
        return "x", a[0], min(a[1], b[1]), max(a[1], b[1])
    if a[1] == b[1]:
        return "y", a[1], min(a[0], b[0]), max(a[0], b[0])
    return None


def _integers_between(lo: Fraction, hi: Fraction, top: int) -> range:
    return range(max(math.ceil(lo), 0), min(math.floor(hi), top) + 1)


def _lattice_points(a: Point, b: Point, top: int) -> Iterator[tuple[int, int]]:
    """Lattice points of ``{0..top}^2`` on the closed piece from `a` to `b`."""
    for x in _integers_between(min(a[0], b[0]), max(a[0], b[0]), top):
        for y in _integers_between(min(a[1], b[1]), max(a[1], b[1]), top):
            if _cross((x, y), a, b) == 0:
                yield x, y


def _cross(p: Point, a: Point, b: Point) -> Fraction:
    return (b[0] - a[0]) * (p[1] - a[1]) - (b[1] - a[1]) * (p[0] - a[0])


def _on_piece(p: Point, a: Point, b: Point) -> bool:
    return (
        min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
        and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])
    )


def pieces_intersect(a: Point, b: Point, c: Point, d: Point) -> bool:
    """Whether the closed pieces ``ab`` and ``cd`` share a point."""
    d1, d2 = _cross(c, a, b), _cross(d, a, b)
    d3, d4 = _cross(a, c, d), _cross(b, c, d)
    if ((d1 > 0 > d2) or (d1 < 0 < d2)) and ((d3 > 0 > d4) or (d3 < 0 < d4)):
        return True
    return (
        (d1 == 0 and _on_piece(c, a, b))
        or (d2 == 0 and _on_piece(d, a, b))
        or (d3 == 0 and _on_piece(a, c, d))
        or (d4 == 0 and _on_piece(b, c, d))
    )


class _Verifier:
    def __init__(self, embedding: ChamanaraEmbedding) -> None:
        self.e = embedding
        self.top = embedding.side_length - 1
        self.low = embedding.delta
        self.high = embedding.delta + embedding.side_length
        self.violations: list[Violation] = []

    def flag(self, check: Check, edges: tuple[EdgeId, ...], message: str) -> None:
        self.violations.append(Violation(check, edges, message))

    def psi(self, vertex: int) -> Point:
        x, y = self.e.points[vertex]
        return Fraction(x), Fraction(y)

    def check_coverage(self) -> None:
        graph = build_graph(vdc_prefix(2, self.e.N))
        expected = {edge: (u, v) for edge, u, v in graph.edges()}
        seen = Counter(route.edge for route in self.e.routes)
        for edge, count in seen.items():
            if count > 1:
                message = f"Edge {edge} is routed {count} times."
                self.flag(Check.COVERAGE, (edge,), message)
        for route in self.e.routes:
            ends = expected.get(route.edge)
            if ends is None:
                message = f"{route.edge} is not an edge."
                self.flag(Check.COVERAGE, (route.edge,), message)
            elif ends != (route.u, route.v):
                self.flag(
                    Check.COVERAGE,
                    (route.edge,),
                    f"{route.edge} joins {ends}, route joins {(route.u, route.v)}.",
                )
        missing = tuple(edge for edge in expected if edge not in seen)
        if missing:
            self.flag(Check.COVERAGE, missing, f"{len(missing)} edges have no route.")

    def check_segment_reuse(self) -> None:
        lines: dict[tuple[str, Fraction], list[tuple[Fraction, Fraction, EdgeId]]]
        lines = defaultdict(list)
        for route in self.e.routes:
            for a, b in route.pieces():
                line = _axis_line(a, b)
                if line is None:
                    if route.case is not RouteCase.REROUTE:
                        self.flag(
                            Check.LATTICE,
                            (route.edge,),
                            f"Slanted piece {a}-{b} outside a rerouted edge.",
                        )
                    continue
                orientation, fixed, lo, hi = line
                if lo == hi:
                    continue
                if not _is_integer(fixed):
                    self.flag(
                        Check.LATTICE,
                        (route.edge,),
                        f"Piece {a}-{b} is off the integer grid.",
                    )
                lines[orientation, fixed].append((lo, hi, route.edge))

        for (orientation, fixed), intervals in sorted(lines.items()):
            intervals.sort()
            reach, owner = intervals[0][1], intervals[0][2]
            for lo, hi, edge in intervals[1:]:
                if lo < reach:
                    self.flag(
                        Check.SEGMENT_REUSE,
                        (owner, edge),
                        f"Routes overlap on the line {orientation}={fixed} near {lo}.",
                    )
                if hi > reach:
                    reach, owner = hi, edge

    def check_lattice(self, route: EdgeRoute) -> None:
        start, end = self.psi(route.u), self.psi(route.v)
        if route.start != start or route.end != end:
            self.flag(
                Check.LATTICE,
                (route.edge,),
                f"Route runs {route.start}->{route.end}, expected {start}->{end}.",
            )
        allowed = {start, end}
        for a, b in route.pieces():
            for point in _lattice_points(a, b, self.top):
                if (Fraction(point[0]), Fraction(point[1])) not in allowed:
                    self.flag(
                        Check.LATTICE,
                        (route.edge,),
                        f"Route passes through the lattice point {point}.",
                    )

    def check_crossing(self, route: EdgeRoute) -> None:
        for leg in route.legs:
            for x, y in leg:
                if not (self.low <= x <= self.high and self.low <= y <= self.high):
                    self.flag(
                        Check.CROSSING,
                        (route.edge,),
                        f"Point {(x, y)} lies outside the square.",
                    )
        if len(route.legs) != len(route.crossings) + 1:
            self.flag(
                Check.CROSSING,
                (route.edge,),
                f"{len(route.legs)} legs do not fit {len(route.crossings)} crossings.",
            )
            return
        for j, crossing in enumerate(route.crossings):
            if crossing.entry != route.legs[j][-1] or crossing.exit != route.legs[j + 1][0]:
                self.flag(
                    Check.CROSSING,
                    (route.edge,),
                    f"Legs are not joined by the crossing through {crossing.segment}.",
                )
            if not self._crossing_consistent(crossing):
                self.flag(
                    Check.CROSSING,
                    (route.edge,),
                    f"Crossing {crossing.segment} from {crossing.entry} does not "
                    f"arrive at {crossing.exit}.",
                )

    def _crossing_consistent(self, crossing: Crossing) -> bool:
        try:
            axis, k = parse_segment_name(crossing.segment)
            segment = segment_map(self.e.m, self.e.delta, k, axis)
        except InvalidParam:
            return False

        # Coordinates along the glued sides, then across them.
        along, across = (0, 1) if axis is Axis.HORIZONTAL else (1, 0)
        t, side = crossing.entry[along], crossing.entry[across]
        if side == segment.first_side and segment.on_first(t):
            expected = segment.image(t), segment.second_side
        elif side == segment.second_side and segment.on_second(t):
            expected = segment.preimage(t), segment.first_side
        else:
            return False
        return (crossing.exit[along], crossing.exit[across]) == expected

    def check_reroutes(self) -> None:
        reroutes = self.e.reroutes
        last = self.e.N - 1
        if len(reroutes) != REROUTE_COUNT:
            self.flag(
                Check.REROUTE,
                tuple(r.edge for r in reroutes),
                f"Expected {REROUTE_COUNT} rerouted edges, found {len(reroutes)}.",
            )
        radius = HALF + self.e.epsilon
        for route in reroutes:
            if {route.u, route.v} != {last, 0}:
                self.flag(
                    Check.REROUTE,
                    (route.edge,),
                    f"Rerouted edge joins {route.u} and {route.v}, not {last} and 0.",
                )
                continue
            near, far = self.psi(route.u), self.psi(route.v)
            for j, leg in enumerate(route.legs):
                center = near if j == 0 else far
                for p in leg:
                    if max(abs(p[0] - center[0]), abs(p[1] - center[1])) > radius:
                        self.flag(
                            Check.REROUTE,
                            (route.edge,),
                            f"Point {p} strays from the corner region around {center}.",
                        )
            self._check_slanted(route)

    def _check_slanted(self, route: EdgeRoute) -> None:
        slanted = [(a, b) for a, b in route.pieces() if _axis_line(a, b) is None]
        for a, b in slanted:
            for other in self.e.routes:
                if other.edge == route.edge:
                    continue
                for c, d in other.pieces():
                    if pieces_intersect(a, b, c, d):
                        self.flag(
                            Check.REROUTE,
                            (route.edge, other.edge),
                            f"Slanted piece {a}-{b} meets {other.edge}.",
                        )

    def run(self) -> EmbeddingCertificate:
        self.check_coverage()
        self.check_segment_reuse()
        for route in self.e.routes:
            self.check_lattice(route)
            self.check_crossing(route)
        self.check_reroutes()
        return EmbeddingCertificate(len(self.e.routes), tuple(self.violations))


def verify_embedding(embedding: ChamanaraEmbedding) -> EmbeddingCertificate:
    """Verify `embedding` exactly; the certificate lists every violation found."""
    st_time: float = timeit.default_timer()
    certificate = _Verifier(embedding).run()
    elapsed: float = timeit.default_timer() - st_time
    module_logger.info(
        "Verified %d routes at m=%d in %.3fs: %d violations",
        certificate.routes_checked,
        embedding.m,
        elapsed,
        len(certificate.violations),
    )
    return certificate

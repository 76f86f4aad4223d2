"""
Rotation systems and face tracing.

Edge ``e`` contributes the darts ``2e`` (at its first endpoint) and ``2e + 1``
(at its second endpoint); ``d ^ 1`` is the other end of dart ``d``. A rotation
system lists the darts at every vertex in cyclic order. Faces are the cycles
of ``phi(d) = sigma(d ^ 1)``, where ``sigma`` moves to the next dart around the
vertex.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import StrEnum
from typing import TYPE_CHECKING, Any

import networkx as nx

from sequence_graphs.errors import (
    DegenerateConnectionSet,
    DegenerateGraph,
    InvalidParam,
    InvalidRotation,
)
from sequence_graphs.graphs import CycleTag

if TYPE_CHECKING:
    from collections.abc import Mapping, Sequence

    from sequence_graphs.graphs import EdgeId, LabeledMultiGraph

module_logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RotationSystem:
    """Cyclic dart orders of a multigraph.

    Parameters
    ----------
    vertices : tuple[int, ...]
        All vertex labels, including isolated ones.
    edges : tuple[tuple[int, int], ...]
        Oriented endpoints of edge ``e``.
    rotation : Mapping[int, tuple[int, ...]]
        Darts around each vertex in cyclic order.
    """

    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    rotation: Mapping[int, tuple[int, ...]]

    def dart_vertex(self, dart: int) -> int:
        return self.edges[dart >> 1][dart & 1]

    def validate(self) -> None:
        """Check that every dart sits exactly once at its own vertex.

        Raises
        ------
        InvalidRotation
            If the dart bookkeeping is inconsistent.
        """
        seen: set[int] = set()
        for vertex, darts in self.rotation.items():
            for dart in darts:
                if not 0 <= dart < 2 * len(self.edges):
                    msg = f"Dart {dart} at vertex {vertex} has no edge."
                    raise InvalidRotation(msg)
                if dart in seen:
                    msg = f"Dart {dart} appears twice in the rotation."
                    raise InvalidRotation(msg)
                if self.dart_vertex(dart) != vertex:
                    msg = f"Dart {dart} belongs to vertex {self.dart_vertex(dart)}, not {vertex}."
                    raise InvalidRotation(msg)
                seen.add(dart)
        if len(seen) != 2 * len(self.edges):
            msg = f"{2 * len(self.edges) - len(seen)} darts are missing from the rotation."
            raise InvalidRotation(msg)

    def successor_dart(self) -> dict[int, int]:
        """``sigma``: the next dart around the same vertex."""
        sigma = {}
        for darts in self.rotation.values():
            for j, dart in enumerate(darts):
                sigma[dart] = darts[(j + 1) % len(darts)]
        return sigma

    def components(self) -> int:
        graph = nx.MultiGraph()
        graph.add_nodes_from(self.vertices)
        graph.add_edges_from(self.edges)
        return nx.number_connected_components(graph)


@dataclass(frozen=True)
class FaceReport:
    faces: tuple[tuple[int, ...], ...]
    V: int
    E: int
    F: int
    components: int

    @property
    def euler_characteristic(self) -> int:
        return self.V - self.E + self.F

    @property
    def genus(self) -> int:
        return self.components - self.euler_characteristic // 2

    def face_lengths(self) -> dict[int, int]:
        lengths: dict[int, int] = {}
        for face in self.faces:
            lengths[len(face)] = lengths.get(len(face), 0) + 1
        return dict(sorted(lengths.items()))

    def to_json(self) -> dict[str, Any]:
        return {
            "V": self.V,
            "E": self.E,
            "F": self.F,
            "components": self.components,
            "euler_characteristic": self.euler_characteristic,
            "genus": self.genus,
            "face_lengths": {str(k): v for k, v in self.face_lengths().items()},
        }


def face_trace(rs: RotationSystem) -> FaceReport:
    """Trace the faces of `rs` and derive its Euler characteristic and genus.

    An isolated vertex counts as a sphere with one face.

    Raises
    ------
    InvalidRotation
        If the rotation is inconsistent or the Euler characteristic is odd.
    """
    rs.validate()
    sigma = rs.successor_dart()

    faces = []
    visited: set[int] = set()
    for start in sorted(sigma):
        if start in visited:
            continue
        face = []
        dart = start
        while dart not in visited:
            visited.add(dart)
            face.append(dart)
            dart = sigma[dart ^ 1]
        faces.append(tuple(face))

    isolated = sum(1 for v in rs.vertices if not rs.rotation.get(v))
    report = FaceReport(
        tuple(faces),
        len(rs.vertices),
        len(rs.edges),
        len(faces) + isolated,
        rs.components(),
    )
    if report.euler_characteristic % 2:
        msg = f"Odd Euler characteristic {report.euler_characteristic}."
        raise InvalidRotation(msg)
    module_logger.debug(
        "Traced %d faces: chi=%d, genus=%d",
        report.F,
        report.euler_characteristic,
        report.genus,
    )
    return report


class DartOrder(StrEnum):
    """Dart order ``(+1, +c, -1, -c)`` or its mirror ``(+1, -c, -1, +c)``."""

    STANDARD = "standard"
    TRANSPOSED = "transposed"


def torus_rotation_system(
    N: int,
    c: int,
    order: DartOrder = DartOrder.STANDARD,
    *,
    allow_degenerate: bool = False,
) -> RotationSystem:
    """Rotation system of the circulant ``C_N({1, c})``.

    Edge ``i`` is ``(i, i+1)`` and edge ``N + i`` is ``(i, i+c)``, indices mod `N`.

    Raises
    ------
    InvalidParam
        If `N` < 2 or ``c = 0 (mod N)``.
    DegenerateConnectionSet
        If ``c = +-1 (mod N)`` and `allow_degenerate` is False.
    """
    if N < 2 or c % N == 0:  # noqa: PLR2004
        msg = f"C_{N}({{1, {c}}}) is not a circulant without loops."
        raise InvalidParam(msg)
    if c % N in (1, N - 1) and not allow_degenerate:
        msg = f"c = {c} is +-1 mod {N}, so C_{N}({{1, {c}}}) has doubled edges."
        raise DegenerateConnectionSet(msg)

    edges = tuple(
        [(i, (i + 1) % N) for i in range(N)] + [(i, (i + c) % N) for i in range(N)]
    )
    rotation = {}
    for v in range(N):
        plus_one = 2 * v
        plus_c = 2 * (N + v)
        minus_one = 2 * ((v - 1) % N) + 1
        minus_c = 2 * (N + (v - c) % N) + 1
        if order is DartOrder.STANDARD:
            rotation[v] = (plus_one, plus_c, minus_one, minus_c)
        else:
            rotation[v] = (plus_one, minus_c, minus_one, plus_c)
    return RotationSystem(tuple(range(N)), edges, rotation)


@dataclass(frozen=True)
class TorusEmbedding:
    N: int
    c: int
    order: DartOrder
    rotation: RotationSystem
    faces: FaceReport

    def to_json(self) -> dict[str, Any]:
        return {
            "N": self.N,
            "c": self.c,
            "order": str(self.order),
            "faces": self.faces.to_json(),
        }


def torus_embedding(N: int, c: int, *, allow_degenerate: bool = True) -> TorusEmbedding:
    """Embed ``C_N({1, c})`` with the standard dart order, falling back to the
    transposed order when the standard one does not give genus 1."""
    embedding = None
    for order in DartOrder:
        rs = torus_rotation_system(N, c, order, allow_degenerate=allow_degenerate)
        embedding = TorusEmbedding(N, c, order, rs, face_trace(rs))
        if embedding.faces.genus == 1:
            break
        module_logger.warning(
            "The %s dart order gives genus %d for C_%d({1, %d})",
            order,
            embedding.faces.genus,
            N,
            c,
        )
    return embedding


def _oriented_edges(
    graph: LabeledMultiGraph,
    tag: CycleTag,
) -> tuple[dict[int, int], dict[int, int]]:
    """Edges of one cycle by tail and by head, as positions in ``graph.edge_ids``."""
    out_edges, in_edges = {}, {}
    for e, edge_id in enumerate(graph.edge_ids):
        if edge_id.tag == tag:
            u, v = graph.ends(edge_id)
            out_edges[u] = e
            in_edges[v] = e
    return out_edges, in_edges


def canonical_rotation(graph: LabeledMultiGraph) -> RotationSystem:
    """Rotation system alternating the two cycles at every vertex.

    At vertex ``i`` the darts are ordered toward ``i + 1``, ``S(i)``, ``i - 1``
    and ``S^-1(i)``; edges missing from `graph` (such as a deleted
    ``(N-1, 0)``) are skipped.

    Raises
    ------
    DegenerateGraph
        If the graph has fewer than 3 vertices.
    """
    if graph.number_of_vertices() < 3:  # noqa: PLR2004
        msg = "A canonical rotation needs at least 3 vertices."
        raise DegenerateGraph(msg)

    c1_out, c1_in = _oriented_edges(graph, CycleTag.C1)
    cpi_out, cpi_in = _oriented_edges(graph, CycleTag.CPI)
    edge_ids: Sequence[EdgeId] = graph.edge_ids
    edges = tuple(graph.ends(edge_id) for edge_id in edge_ids)

    rotation = {}
    for v in graph.vertices:
        darts = [
            2 * c1_out[v] if v in c1_out else None,
            2 * cpi_out[v] if v in cpi_out else None,
            2 * c1_in[v] + 1 if v in c1_in else None,
            2 * cpi_in[v] + 1 if v in cpi_in else None,
        ]
        rotation[v] = tuple(d for d in darts if d is not None)
    return RotationSystem(graph.vertices, edges, rotation)

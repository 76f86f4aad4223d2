"""
Labeled multigraphs whose edges carry stable identities.

Edges are keyed by `EdgeId` in an underlying `networkx.MultiGraph`, so parallel
edges stay distinguishable through deletions and contractions. The orientation
an edge was added with is remembered; it is used by rotation systems.
"""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass
from enum import StrEnum
from typing import TYPE_CHECKING

import networkx as nx

from sequence_graphs.errors import InvalidParam, LoopContraction, NoSuchEdge

if TYPE_CHECKING:
    from collections.abc import Iterable

module_logger = logging.getLogger(__name__)


class CycleTag(StrEnum):
    """Which Hamiltonian cycle of a sequence graph an edge belongs to."""

    C1 = "C1"
    CPI = "Cpi"


@dataclass(frozen=True, order=True, slots=True)
class EdgeId:
    tag: str
    index: int

    def __str__(self) -> str:
        return f"{self.tag}[{self.index}]"


class LabeledMultiGraph:
    """A multigraph on integer vertex labels with identified, oriented edges.

    Parameters
    ----------
    vertices : Iterable[int], optional
        Vertex labels, including isolated ones.
    edges : Iterable[tuple[EdgeId, int, int]], optional
        ``(edge_id, u, v)`` triples; endpoints are added as vertices.
    """

    def __init__(
        self,
        vertices: Iterable[int] = (),
        edges: Iterable[tuple[EdgeId, int, int]] = (),
    ) -> None:
        self._graph = nx.MultiGraph()
        self._graph.add_nodes_from(vertices)
        self._ends: dict[EdgeId, tuple[int, int]] = {}
        for edge_id, u, v in edges:
            self.add_edge(edge_id, u, v)

    def __repr__(self) -> str:
        return (
            f"{type(self).__name__}(vertices={self.number_of_vertices()}, "
            f"edges={self.number_of_edges()})"
        )

    def copy(self) -> LabeledMultiGraph:
        return LabeledMultiGraph(self.vertices, self.edges())

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted(self._graph.nodes))

    @property
    def edge_ids(self) -> tuple[EdgeId, ...]:
        """Edge identities in insertion order."""
        return tuple(self._ends)

    def edges(self) -> list[tuple[EdgeId, int, int]]:
        return [(edge_id, u, v) for edge_id, (u, v) in self._ends.items()]

    def ends(self, edge_id: EdgeId) -> tuple[int, int]:
        """The oriented endpoints of `edge_id`.

        Raises
        ------
        NoSuchEdge
            If the edge is not in the graph.
        """
        try:
            return self._ends[edge_id]
        except KeyError:
            msg = f"No edge {edge_id} in the graph."
            raise NoSuchEdge(msg) from None

    def has_edge(self, edge_id: EdgeId) -> bool:
        return edge_id in self._ends

    def number_of_vertices(self) -> int:
        return self._graph.number_of_nodes()

    def number_of_edges(self) -> int:
        return len(self._ends)

    def degree(self, vertex: int) -> int:
        """Degree counting multiplicity; a loop counts twice."""
        return self._graph.degree(vertex)

    def incident_edges(self, vertex: int) -> list[EdgeId]:
        """Identities of the edges at `vertex`, each loop listed once."""
        return sorted({key for _, _, key in self._graph.edges(vertex, keys=True)})

    def add_edge(self, edge_id: EdgeId, u: int, v: int) -> None:
        if edge_id in self._ends:
            msg = f"Edge {edge_id} is already in the graph."
            raise InvalidParam(msg)
        self._graph.add_edge(u, v, key=edge_id)
        self._ends[edge_id] = (u, v)

    def remove_edge(self, edge_id: EdgeId) -> None:
        """Remove `edge_id` in place.

        Raises
        ------
        NoSuchEdge
            If the edge is not in the graph.
        """
        u, v = self.ends(edge_id)
        self._graph.remove_edge(u, v, key=edge_id)
        del self._ends[edge_id]

    def contract(self, edge_id: EdgeId) -> tuple[int, list[EdgeId]]:
        """Contract `edge_id` in place, merging its endpoints into the smaller label.

        Parallel copies of the contracted edge would become loops and are
        removed; every other edge is kept, re-attached to the merged vertex.

        Returns
        -------
        tuple[int, list[EdgeId]]
            The surviving label and the parallel copies that were dropped.

        Raises
        ------
        NoSuchEdge
            If the edge is not in the graph.
        LoopContraction
            If the edge is a loop.
        """
        u, v = self.ends(edge_id)
        if u == v:
            msg = f"Cannot contract the loop {edge_id} at vertex {u}."
            raise LoopContraction(msg)
        keep, drop = min(u, v), max(u, v)

        dropped = []
        self.remove_edge(edge_id)
        for other in self.incident_edges(drop):
            a, b = self._ends[other]
            self.remove_edge(other)
            if {a, b} == {keep, drop}:
                dropped.append(other)
                continue
            self.add_edge(
                other,
                keep if a == drop else a,
                keep if b == drop else b,
            )
        self._graph.remove_node(drop)

        module_logger.debug("Contracted %s: %d absorbed into %d", edge_id, drop, keep)
        return keep, dropped

    def edge_multiset(self) -> Counter[tuple[int, int]]:
        """Unordered endpoint pairs with multiplicity, ignoring identities."""
        return Counter((min(u, v), max(u, v)) for u, v in self._ends.values())

    def to_networkx(self) -> nx.MultiGraph:
        """A copy of the underlying graph, keyed by `EdgeId`."""
        return self._graph.copy()

    def is_connected(self) -> bool:
        if self.number_of_vertices() == 0:
            return False
        return nx.is_connected(self._graph)


def delete_edge(g: LabeledMultiGraph, edge_id: EdgeId) -> LabeledMultiGraph:
    """A copy of `g` without `edge_id`.

    Raises
    ------
    NoSuchEdge
        If the edge is not in the graph.
    """
    result = g.copy()
    result.remove_edge(edge_id)
    return result


def contract_edge(g: LabeledMultiGraph, edge_id: EdgeId) -> LabeledMultiGraph:
    """A copy of `g` with `edge_id` contracted; see `LabeledMultiGraph.contract`."""
    result = g.copy()
    result.contract(edge_id)
    return result


def is_same_labeled_graph(a: LabeledMultiGraph, b: LabeledMultiGraph) -> bool:
    """Same vertex labels and same endpoint multiset, whatever the edge identities."""
    return a.vertices == b.vertices and a.edge_multiset() == b.edge_multiset()


@dataclass(frozen=True)
class DegreeReport:
    """Degree histogram and connectivity of a multigraph."""

    histogram: dict[int, int]
    connected: bool

    @property
    def regular_degree(self) -> int | None:
        """The common degree if the graph is regular."""
        if len(self.histogram) == 1:
            return next(iter(self.histogram))
        return None

    def to_json(self) -> dict[str, object]:
        return {
            "connected": self.connected,
            "degrees": {str(k): v for k, v in sorted(self.histogram.items())},
        }


def degree_report(g: LabeledMultiGraph) -> DegreeReport:
    histogram = Counter(g.degree(v) for v in g.vertices)
    return DegreeReport(dict(sorted(histogram.items())), g.is_connected())

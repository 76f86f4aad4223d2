"""
Reduction of ``G_M`` to ``G'_N`` by edge deletions and contractions.

The ``C1`` edges ``(N-1, N), ..., (M-2, M-1), (M-1, 0)`` are deleted, which
leaves every vertex ``N..M-1`` with its two ``Cpi`` edges only. These vertices
are then contracted away from ``M-1`` down to ``N``.
"""

from __future__ import annotations

import logging
import timeit
from dataclasses import dataclass
from typing import TYPE_CHECKING, Any

from sequence_graphs.errors import DegenerateGraph, InvalidRange
from sequence_graphs.graphs.multigraph import CycleTag, EdgeId, LabeledMultiGraph

if TYPE_CHECKING:
    from sequence_graphs.graphs.sequence_graph import SequenceGraph

module_logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Contraction:
    vertex: int
    edge: EdgeId
    merged_into: int
    dropped: tuple[EdgeId, ...] = ()


@dataclass(frozen=True)
class MinorReduction:
    """The result of `minor_reduction` together with the steps taken."""

    M: int
    N: int
    graph: LabeledMultiGraph
    deleted: tuple[EdgeId, ...]
    contractions: tuple[Contraction, ...]

    def to_json(self) -> dict[str, Any]:
        return {
            "M": self.M,
            "N": self.N,
            "deleted": [str(edge_id) for edge_id in self.deleted],
            "contractions": [
                {
                    "vertex": step.vertex,
                    "edge": str(step.edge),
                    "merged_into": step.merged_into,
                    "dropped": [str(edge_id) for edge_id in step.dropped],
                }
                for step in self.contractions
            ],
        }


def _contraction_edge(graph: LabeledMultiGraph, vertex: int) -> EdgeId:
    """The edge at `vertex` toward its lower-labeled neighbour."""

    def other_end(edge_id: EdgeId) -> int:
        u, v = graph.ends(edge_id)
        return v if u == vertex else u

    candidates = [e for e in graph.incident_edges(vertex) if other_end(e) != vertex]
    return min(candidates, key=lambda e: (other_end(e), e))


def minor_reduction(g_M: SequenceGraph, N: int) -> MinorReduction:
    """Reduce `g_M` to a graph on ``0..N-1``, recording every step.

    Parameters
    ----------
    g_M : SequenceGraph
        The sequence graph on ``M`` vertices.
    N : int
        Target size, ``2 <= N < M``.

    Returns
    -------
    MinorReduction
        The reduced graph and its deletion and contraction trace.

    Raises
    ------
    InvalidRange
        If `N` is not in ``2..M-1``.
    DegenerateGraph
        If a vertex about to be contracted does not have degree 2.
    """
    M = g_M.N
    if not 2 <= N < M:  # noqa: PLR2004
        msg = f"Cannot reduce G_{M} to G'_{N}: need 2 <= N < M."
        raise InvalidRange(msg)

    module_logger.debug("Reducing G_%d to G'_%d", M, N)
    st_time: float = timeit.default_timer()

    graph = g_M.to_multigraph()
    deleted = tuple(EdgeId(CycleTag.C1, i) for i in range(N - 1, M))
    for edge_id in deleted:
        graph.remove_edge(edge_id)

    contractions = []
    for vertex in range(M - 1, N - 1, -1):
        degree = graph.degree(vertex)
        if degree != 2:  # noqa: PLR2004
            msg = f"Vertex {vertex} has degree {degree} when it should have degree 2."
            raise DegenerateGraph(msg)
        edge_id = _contraction_edge(graph, vertex)
        kept, dropped = graph.contract(edge_id)
        contractions.append(Contraction(vertex, edge_id, kept, tuple(dropped)))

    elapsed: float = timeit.default_timer() - st_time
    module_logger.info("Reduced G_%d to G'_%d in %.3fs", M, N, elapsed)
    return MinorReduction(M, N, graph, deleted, tuple(contractions))


def minor_reduce(g_M: SequenceGraph, N: int) -> LabeledMultiGraph:
    """``G'_N`` obtained from `g_M` as a minor; see `minor_reduction`."""
    return minor_reduction(g_M, N).graph

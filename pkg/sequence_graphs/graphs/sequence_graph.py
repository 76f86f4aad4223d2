"""
Sequence graphs: the index-order cycle ``C1`` and the sorted-order cycle ``Cpi``.

For a sorted prefix of length ``N``, ``C1`` has edges ``(i, i+1 mod N)`` and
``Cpi`` has edges ``(pi[i], pi[i+1 mod N])``; edge ``i`` of each cycle carries
the identity ``EdgeId(tag, i)``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import TYPE_CHECKING, Any

from sequence_graphs.errors import InvalidParam
from sequence_graphs.graphs.multigraph import CycleTag, EdgeId, LabeledMultiGraph

if TYPE_CHECKING:
    from collections.abc import Mapping

    from sequence_graphs.sequences import SortedSequence

module_logger = logging.getLogger(__name__)

Edge = tuple[int, int]


@dataclass(frozen=True)
class SequenceGraph:
    """The ``N``-th sequence graph as two edge-labeled Hamiltonian cycles."""

    N: int
    c1_edges: tuple[Edge, ...]
    cpi_edges: tuple[Edge, ...]

    @property
    def cpi_order(self) -> tuple[int, ...]:
        """The vertices in the order ``Cpi`` visits them, i.e. ``pi``."""
        return tuple(u for u, _ in self.cpi_edges)

    def edges(self) -> list[tuple[EdgeId, int, int]]:
        return [
            *(
                (EdgeId(CycleTag.C1, i), u, v)
                for i, (u, v) in enumerate(self.c1_edges)
            ),
            *(
                (EdgeId(CycleTag.CPI, i), u, v)
                for i, (u, v) in enumerate(self.cpi_edges)
            ),
        ]

    def to_multigraph(self) -> LabeledMultiGraph:
        return LabeledMultiGraph(range(self.N), self.edges())

    def to_json(self) -> dict[str, Any]:
        return {
            "n": self.N,
            "edges": [
                {"u": u, "v": v, "cycle": str(edge_id.tag), "index": edge_id.index}
                for edge_id, u, v in self.edges()
            ],
        }

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> SequenceGraph:
        """Rebuild a graph from `to_json` output.

        Raises
        ------
        InvalidParam
            If the document does not describe two full cycles on ``0..n-1``.
        """
        try:
            n = int(data["n"])
            cycles: dict[str, dict[int, Edge]] = {tag: {} for tag in CycleTag}
            for edge in data["edges"]:
                cycles[CycleTag(edge["cycle"])][int(edge["index"])] = (
                    int(edge["u"]),
                    int(edge["v"]),
                )
        except (KeyError, TypeError, ValueError) as e:
            msg = f"Malformed sequence graph document: {e}"
            raise InvalidParam(msg) from e

        for tag, edges in cycles.items():
            if sorted(edges) != list(range(n)):
                msg = f"Cycle {tag} must have edges indexed 0..{n - 1}."
                raise InvalidParam(msg)
        return cls(
            n,
            tuple(cycles[CycleTag.C1][i] for i in range(n)),
            tuple(cycles[CycleTag.CPI][i] for i in range(n)),
        )


def build_graph(seq: SortedSequence) -> SequenceGraph:
    """The sequence graph of a sorted prefix."""
    n = seq.N
    c1_edges = tuple((i, (i + 1) % n) for i in range(n))
    cpi_edges = tuple((seq.pi[i], seq.pi[(i + 1) % n]) for i in range(n))
    module_logger.debug("Built sequence graph with %d vertices", n)
    return SequenceGraph(n, c1_edges, cpi_edges)


def last_c1_edge(n: int) -> EdgeId:
    """Identity of the ``C1`` edge ``(N-1, 0)``."""
    return EdgeId(CycleTag.C1, n - 1)


def g_prime(seq: SortedSequence) -> LabeledMultiGraph:
    """``G'_N``: the sequence graph with the ``C1`` edge ``(N-1, 0)`` deleted."""
    graph = build_graph(seq).to_multigraph()
    graph.remove_edge(last_c1_edge(seq.N))
    return graph

from .minor import Contraction, MinorReduction, minor_reduce, minor_reduction
from .multigraph import (
    CycleTag,
    DegreeReport,
    EdgeId,
    LabeledMultiGraph,
    contract_edge,
    degree_report,
    delete_edge,
    is_same_labeled_graph,
)
from .sequence_graph import SequenceGraph, build_graph, g_prime, last_c1_edge

__all__ = [
    # minor
    "Contraction",
    "MinorReduction",
    "minor_reduce",
    "minor_reduction",
    # multigraph
    "CycleTag",
    "DegreeReport",
    "EdgeId",
    "LabeledMultiGraph",
    "contract_edge",
    "degree_report",
    "delete_edge",
    "is_same_labeled_graph",
    # sequence_graph
    "SequenceGraph",
    "build_graph",
    "g_prime",
    "last_c1_edge",
]

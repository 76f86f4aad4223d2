from collections.abc import Callable

from sequence_graphs.embedding import chamanara_embed, chamanara_svg, sequence_graph_svg
from sequence_graphs.embedding.svg import CYCLE_COLORS, REROUTE_COLOR
from sequence_graphs.graphs import CycleTag, build_graph
from sequence_graphs.sequences import SortedSequence

Prefix = Callable[[int], SortedSequence]


def test_sequence_graph_svg(golden_prefix: Prefix) -> None:
    svg = sequence_graph_svg(build_graph(golden_prefix(8)))
    assert svg.startswith("<svg ")
    assert svg.endswith("</svg>\n")
    assert svg.count("<line ") == 16
    assert svg.count("<circle ") == 8
    assert svg.count(CYCLE_COLORS[CycleTag.C1]) == 8
    assert svg.count(CYCLE_COLORS[CycleTag.CPI]) == 8
    assert "G_8" in svg


def test_chamanara_svg() -> None:
    svg = chamanara_svg(chamanara_embed(1))
    assert svg.count("<circle ") == 4
    assert svg.count("<polyline ") == 12
    assert svg.count(REROUTE_COLOR) == 4
    # h1, v1 carry one tick per side and h2, v2 two.
    assert svg.count("<line ") == 12
    assert ">3</text>" in svg


def test_chamanara_svg_hides_labels_on_large_grids() -> None:
    svg = chamanara_svg(chamanara_embed(4))
    assert svg.count("<circle ") == 256
    assert "</text>" in svg
    assert ">255</text>" not in svg


def test_svg_is_deterministic(golden_prefix: Prefix) -> None:
    graph = build_graph(golden_prefix(21))
    assert sequence_graph_svg(graph) == sequence_graph_svg(graph)
    assert chamanara_svg(chamanara_embed(2)) == chamanara_svg(chamanara_embed(2))

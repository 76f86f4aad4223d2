"""SVG drawings of sequence graphs and of the Chamanara square embedding."""

from __future__ import annotations

import math
from typing import TYPE_CHECKING

from sequence_graphs.embedding.chamanara import RouteCase
from sequence_graphs.embedding.segments import Axis, segment_map
from sequence_graphs.graphs import CycleTag

if TYPE_CHECKING:
    from collections.abc import Callable
    from fractions import Fraction

    from sequence_graphs.embedding.chamanara import ChamanaraEmbedding
    from sequence_graphs.graphs import SequenceGraph

FONT_FAMILY = "Helvetica, Arial, sans-serif"
CYCLE_COLORS = {CycleTag.C1: "#1f77b4", CycleTag.CPI: "#ff7f0e"}
GRID_ROUTE_COLOR = "#00a0c0"
REROUTE_COLOR = "#c0008a"
TICK_SPACING = 4.0
TICK_LENGTH = 6.0


def _header(width: int, height: int, title: str) -> list[str]:
    return [
        f'<svg xmlns="http://www.w3.org/2000/svg" '
        f'width="{width}" height="{height}" viewBox="0 0 {width} {height}">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>',
        f'<text x="{width / 2:.1f}" y="24" text-anchor="middle" '
        f'font-family="{FONT_FAMILY}" font-size="16" font-weight="700">{title}</text>',
    ]


def sequence_graph_svg(graph: SequenceGraph, size_px: int = 800) -> str:
    """Vertices on a circle in index order, ``C1`` and ``Cpi`` in two colours."""
    margin = 60
    radius = (size_px - 2 * margin) / 2
    center = size_px / 2

    def position(i: int) -> tuple[float, float]:
        angle = 2 * math.pi * i / graph.N - math.pi / 2
        return center + radius * math.cos(angle), center + radius * math.sin(angle)

    parts = _header(size_px, size_px, f"Sequence graph G_{graph.N}")
    parts.append('<g stroke-linecap="round" fill="none">')
    for edge_id, u, v in graph.edges():
        (x1, y1), (x2, y2) = position(u), position(v)
        parts.append(
            f'<line x1="{x1:.2f}" y1="{y1:.2f}" x2="{x2:.2f}" y2="{y2:.2f}" '
            f'stroke="{CYCLE_COLORS[edge_id.tag]}" stroke-width="1.2" '
            f'stroke-opacity="0.8"/>'
        )
    parts.append("</g>")

    parts.append(f'<g font-family="{FONT_FAMILY}" font-size="10">')
    for i in range(graph.N):
        x, y = position(i)
        parts.append(
            f'<circle cx="{x:.2f}" cy="{y:.2f}" r="6" '
            f'fill="#ffffff" stroke="#444444" stroke-width="0.8"/>'
        )
        parts.append(f'<text x="{x:.2f}" y="{y + 3:.2f}" text-anchor="middle">{i}</text>')
    parts.append("</g>")
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def _ticks(
    to_svg_xy: Callable[[Fraction, Fraction], tuple[float, float]],
    point: tuple[Fraction, Fraction],
    count: int,
    *,
    horizontal_side: bool,
) -> list[str]:
    """`count` short marks across a side at `point`; partners share the count."""
    x, y = to_svg_xy(*point)
    offset = -(count - 1) * TICK_SPACING / 2
    marks = []
    for j in range(count):
        shift = offset + j * TICK_SPACING
        if horizontal_side:
            x1, y1, x2, y2 = x + shift, y - TICK_LENGTH, x + shift, y + TICK_LENGTH
        else:
            x1, y1, x2, y2 = x - TICK_LENGTH, y + shift, x + TICK_LENGTH, y + shift
        marks.append(
            f'<line x1="{x1:.2f}" y1="{y1:.2f}" x2="{x2:.2f}" y2="{y2:.2f}" '
            f'stroke="#333333" stroke-width="1"/>'
        )
    return marks


def chamanara_svg(embedding: ChamanaraEmbedding, size_px: int = 900) -> str:
    """The unfolded square with its identified segments, vertices and routes.

    Glued segments carry the same number of tick marks; grid-routed edges and the
    two rerouted edges are drawn in different colours.
    """
    margin = 60
    side = embedding.side_length
    delta = embedding.delta
    scale = (size_px - 2 * margin) / side

    def to_svg_xy(x: Fraction, y: Fraction) -> tuple[float, float]:
        return (
            margin + float(x - delta) * scale,
            margin + float(delta + side - y) * scale,
        )

    parts = _header(size_px, size_px, f"Chamanara embedding, N = {embedding.N}")
    x0, y0 = to_svg_xy(delta, delta + side)
    parts.append(
        f'<rect x="{x0:.2f}" y="{y0:.2f}" width="{side * scale:.2f}" '
        f'height="{side * scale:.2f}" fill="none" stroke="#000000" stroke-width="1.5"/>'
    )

    parts.append("<g>")
    for k in range(1, embedding.m + 2):
        for axis in Axis:
            segment = segment_map(embedding.m, delta, k, axis)
            for start, fixed in (
                (segment.first_start, segment.first_side),
                (segment.second_start, segment.second_side),
            ):
                middle = start + segment.length / 2
                point = (middle, fixed) if axis is Axis.HORIZONTAL else (fixed, middle)
                parts.extend(
                    _ticks(to_svg_xy, point, k, horizontal_side=axis is Axis.HORIZONTAL)
                )
    parts.append("</g>")

    parts.append('<g stroke-linecap="round" stroke-linejoin="round" fill="none">')
    for route in embedding.routes:
        color = REROUTE_COLOR if route.case is RouteCase.REROUTE else GRID_ROUTE_COLOR
        for leg in route.legs:
            points = " ".join(
                "{:.2f},{:.2f}".format(*to_svg_xy(x, y)) for x, y in leg
            )
            parts.append(
                f'<polyline points="{points}" stroke="{color}" stroke-width="1.6"/>'
            )
    parts.append("</g>")

    parts.append(f'<g font-family="{FONT_FAMILY}" font-size="9">')
    for i, (x, y) in enumerate(embedding.points):
        cx, cy = to_svg_xy(x, y)
        parts.append(
            f'<circle cx="{cx:.2f}" cy="{cy:.2f}" r="3.5" fill="#222222"/>'
        )
        if embedding.m <= 3:  # noqa: PLR2004
            parts.append(f'<text x="{cx + 5:.2f}" y="{cy - 5:.2f}">{i}</text>')
    parts.append("</g>")
    parts.append("</svg>")
    return "\n".join(parts) + "\n"

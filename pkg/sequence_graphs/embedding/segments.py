"""
Halving identifications of the Chamanara square.

The square has side ``L = 2^m`` with its lower-left corner at ``(delta, delta)``.
Segment ``h_k`` glues ``[s_top, s_top + 2^(m-k))`` on the top side to
``[s_bottom, s_bottom + 2^(m-k))`` on the bottom side, where

    s_top    = delta + sum_{j=1..k-1} 2^(m-j)
    s_bottom = delta + 2^(m-k)

``v_k`` glues the right side to the left side with the same coordinates.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import StrEnum
from fractions import Fraction

from sequence_graphs.errors import InvalidParam


class Axis(StrEnum):
    """``h`` segments join top and bottom, ``v`` segments join right and left."""

    HORIZONTAL = "h"
    VERTICAL = "v"


_SEGMENT_NAME = re.compile(r"^([hv])(\d+)$")


@dataclass(frozen=True)
class SegmentMap:
    """One identified pair of sides. ``first`` is the top (``h``) or right (``v``)
    side, ``second`` the bottom or left side."""

    axis: Axis
    k: int
    m: int
    delta: Fraction
    first_start: Fraction
    second_start: Fraction
    length: Fraction

    @property
    def name(self) -> str:
        return f"{self.axis}{self.k}"

    @property
    def side_length(self) -> int:
        return 2**self.m

    @property
    def first_side(self) -> Fraction:
        """Fixed coordinate of the top or right side."""
        return self.delta + self.side_length

    @property
    def second_side(self) -> Fraction:
        """Fixed coordinate of the bottom or left side."""
        return self.delta

    def on_first(self, t: Fraction) -> bool:
        return self.first_start <= t < self.first_start + self.length

    def on_second(self, t: Fraction) -> bool:
        return self.second_start <= t < self.second_start + self.length

    def image(self, t: Fraction) -> Fraction:
        """Position on the second side glued to `t` on the first side."""
        return t - self.first_start + self.second_start

    def preimage(self, t: Fraction) -> Fraction:
        """Position on the first side glued to `t` on the second side."""
        return t - self.second_start + self.first_start

    def to_json(self) -> dict[str, str]:
        return {
            "segment": self.name,
            "first_start": str(self.first_start),
            "second_start": str(self.second_start),
            "length": str(self.length),
        }


def segment_map(m: int, delta: Fraction, k: int, axis: Axis | str) -> SegmentMap:
    """The identification ``h_k`` or ``v_k`` at scale `m`.

    Raises
    ------
    InvalidParam
        If `k` < 1 or `m` < 1.
    """
    if k < 1 or m < 1:
        msg = f"Segments need k >= 1 and m >= 1, got k={k}, m={m}."
        raise InvalidParam(msg)
    delta = Fraction(delta)
    length = Fraction(2) ** (m - k)
    offset = sum((Fraction(2) ** (m - j) for j in range(1, k)), Fraction(0))
    return SegmentMap(Axis(axis), k, m, delta, delta + offset, delta + length, length)


def parse_segment_name(name: str) -> tuple[Axis, int]:
    """Split ``"h3"`` into ``(Axis.HORIZONTAL, 3)``.

    Raises
    ------
    InvalidParam
        If `name` is not of that form.
    """
    match = _SEGMENT_NAME.match(name)
    if match is None:
        msg = f"{name!r} does not name a segment."
        raise InvalidParam(msg)
    return Axis(match.group(1)), int(match.group(2))

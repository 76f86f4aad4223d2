from fractions import Fraction

import pytest

from sequence_graphs.embedding import (
    Axis,
    chamanara_frame,
    parse_segment_name,
    segment_map,
)
from sequence_graphs.errors import InvalidParam


def test_first_halving_at_m2() -> None:
    _, delta = chamanara_frame(2)
    h1 = segment_map(2, delta, 1, Axis.HORIZONTAL)
    assert h1.name == "h1"
    assert h1.first_start == delta
    assert h1.second_start == delta + 2
    assert h1.length == 2
    assert h1.first_side == delta + 4
    assert h1.second_side == delta


def test_small_segment_beyond_the_grid() -> None:
    _, delta = chamanara_frame(2)
    h4 = segment_map(2, delta, 4, "h")
    assert h4.length == Fraction(1, 4)
    assert h4.first_start == delta + Fraction(7, 2)
    assert h4.second_start == delta + Fraction(1, 4)


def test_segments_tile_the_top_side() -> None:
    m = 3
    _, delta = chamanara_frame(m)
    segments = [segment_map(m, delta, k, Axis.HORIZONTAL) for k in range(1, 12)]
    for left, right in zip(segments, segments[1:], strict=False):
        assert left.first_start + left.length == right.first_start
    assert segments[-1].first_start + segments[-1].length < delta + 2**m


def test_axis_symmetry() -> None:
    _, delta = chamanara_frame(3)
    for k in range(1, 6):
        h, v = segment_map(3, delta, k, Axis.HORIZONTAL), segment_map(3, delta, k, "v")
        assert (h.first_start, h.second_start, h.length) == (
            v.first_start,
            v.second_start,
            v.length,
        )
        assert v.name == f"v{k}"


def test_image_and_preimage() -> None:
    _, delta = chamanara_frame(2)
    h2 = segment_map(2, delta, 2, Axis.HORIZONTAL)
    t = h2.first_start + Fraction(1, 3)
    assert h2.on_first(t)
    assert h2.on_second(h2.image(t))
    assert h2.preimage(h2.image(t)) == t
    assert not h2.on_first(h2.first_start + h2.length)


def test_to_json() -> None:
    _, delta = chamanara_frame(1)
    assert segment_map(1, delta, 1, Axis.VERTICAL).to_json() == {
        "segment": "v1",
        "first_start": "-9/16",
        "second_start": "7/16",
        "length": "1",
    }


def test_invalid() -> None:
    with pytest.raises(InvalidParam):
        segment_map(2, Fraction(0), 0, Axis.HORIZONTAL)
    with pytest.raises(InvalidParam):
        segment_map(0, Fraction(0), 1, Axis.HORIZONTAL)
    with pytest.raises(ValueError, match="x"):
        segment_map(1, Fraction(0), 1, "x")


def test_parse_segment_name() -> None:
    assert parse_segment_name("h3") == (Axis.HORIZONTAL, 3)
    assert parse_segment_name("v12") == (Axis.VERTICAL, 12)
    for name in ("x1", "h", "h-1", "v1a"):
        with pytest.raises(InvalidParam):
            parse_segment_name(name)

"""
Fixed-width bit strings of vertex labels.

For ``N = 4^m`` a vertex ``i`` is written as the ``2m``-bit string ``b(i)``, most
significant bit first. ``b_0(i)`` is the first ``m`` bits from the left and
``b_1(i)`` the last ``m``. ``r`` reverses a string.
"""

from __future__ import annotations

from sequence_graphs.errors import InvalidParam, OutOfRange


def _check(i: int, m: int) -> None:
    if m < 1:
        msg = f"Scale exponent m must be at least 1, got {m}."
        raise InvalidParam(msg)
    if not 0 <= i < 4**m:
        msg = f"Vertex {i} outside 0..{4**m - 1} for m={m}."
        raise OutOfRange(msg)


def bits(i: int, m: int) -> str:
    """``b(i)``: the ``2m``-bit representation of `i`."""
    _check(i, m)
    return format(i, f"0{2 * m}b")


def reverse_bits(s: str) -> str:
    """``r(s)``: the bit string reversed."""
    return s[::-1]


def split_b0_b1(i: int, m: int) -> tuple[str, str]:
    """``(b_0(i), b_1(i))``: the left and right halves of ``b(i)``."""
    b = bits(i, m)
    return b[:m], b[m:]


def reverse_int(value: int, width: int) -> int:
    """Reverse the `width`-bit representation of `value`, as an integer."""
    return int(format(value, f"0{width}b")[::-1], 2) if width else 0


def is_all_ones(s: str) -> bool:
    return "0" not in s


def first_zero_from_left(s: str) -> int:
    """1-based position of the first zero of `s`, reading from the left.

    Raises
    ------
    InvalidParam
        If `s` has no zero.
    """
    position = s.find("0")
    if position < 0:
        msg = f"Bit string {s!r} has no zero."
        raise InvalidParam(msg)
    return position + 1

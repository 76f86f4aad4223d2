"""
Van der Corput sequences in any base, as exact rationals.

The term ``a_n`` reverses the base-``b`` digits of ``n`` across the radix point:
if ``n = sum_k d_k(n) b^k`` then ``a_n = sum_k d_k(n) / b^(k+1)``.
"""

from __future__ import annotations

import logging
from fractions import Fraction

from sequence_graphs.bit_utils import bits, reverse_bits
from sequence_graphs.errors import InvalidParam, OutOfRange
from sequence_graphs.sequences.sorted_sequence import SortedSequence
from sequence_graphs.sequences.values import SeqValue

module_logger = logging.getLogger(__name__)


def radical_inverse(n: int, base: int = 2) -> Fraction:
    """The `n`-th van der Corput term in `base`, exactly."""
    numerator = 0
    denominator = 1
    while n:
        n, digit = divmod(n, base)
        numerator = numerator * base + digit
        denominator *= base
    return Fraction(numerator, denominator)


def vdc_prefix(base: int, N: int) -> SortedSequence:
    """The first `N` terms of the base-`base` van der Corput sequence, sorted.

    Raises
    ------
    InvalidParam
        If `base` < 2 or `N` < 1.
    """
    if base < 2:  # noqa: PLR2004
        msg = f"Base must be at least 2, got {base}."
        raise InvalidParam(msg)
    if N < 1:
        msg = f"N must be at least 1, got {N}."
        raise InvalidParam(msg)

    module_logger.debug("Generating %d van der Corput terms in base %d", N, base)
    return SortedSequence.from_terms(
        [SeqValue.rational(radical_inverse(n, base)) for n in range(N)],
    )


def vdc_successor_bits(i: int, m: int) -> int:
    """Successor of `i` in the ``4^m``-th binary van der Corput graph, computed as
    binary addition from the left: ``b(S(i)) = r(r(b(i)) + 1)``.

    Raises
    ------
    OutOfRange
        If `i` is not in ``0..4^m - 1``.
    """
    n = 4**m
    if not 0 <= i < n:
        msg = f"Vertex {i} outside 0..{n - 1} for m={m}."
        raise OutOfRange(msg)
    incremented = (int(reverse_bits(bits(i, m)), 2) + 1) % n
    return int(reverse_bits(bits(incremented, m)), 2)

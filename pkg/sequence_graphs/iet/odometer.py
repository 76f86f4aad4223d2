"""
The dyadic odometer, the infinite IET that adds one "from the left" in binary.

If the binary fraction of ``x`` starts with exactly ``n`` ones then

    T(x) = x - (1 - 2^-n) + 2^-(n+1)

i.e. the leading ones are cleared and the following zero is set. The orbit of
zero is the binary van der Corput sequence.
"""

from __future__ import annotations

from fractions import Fraction

from sequence_graphs.errors import OutOfDomain


def _check_dyadic(x: Fraction) -> None:
    if not 0 <= x < 1:
        msg = f"{x} does not lie in [0, 1)."
        raise OutOfDomain(msg)
    denominator = x.denominator
    if denominator & (denominator - 1):
        msg = f"{x} is not a dyadic rational."
        raise OutOfDomain(msg)


def leading_ones(x: Fraction) -> int:
    """Number of leading ones in the binary fraction of the dyadic `x`."""
    _check_dyadic(x)
    n = 0
    while x >= 1 - Fraction(1, 2 ** (n + 1)):
        n += 1
    return n


def odometer_apply(x: Fraction | int) -> Fraction:
    """Apply the dyadic odometer to `x` exactly.

    Raises
    ------
    OutOfDomain
        If `x` is not a dyadic rational in ``[0, 1)``.
    """
    if not isinstance(x, Fraction | int):
        msg = f"The odometer acts on exact dyadic rationals, got {type(x).__name__}."
        raise OutOfDomain(msg)
    x = Fraction(x)
    n = leading_ones(x)
    return x - (1 - Fraction(1, 2**n)) + Fraction(1, 2 ** (n + 1))


class DyadicOdometer:
    """Callable wrapper so the odometer can be used wherever an IET is."""

    def __call__(self, x: Fraction | int) -> Fraction:
        return odometer_apply(x)

    def __repr__(self) -> str:
        return f"{type(self).__name__}()"

"""
Finite interval exchange transformations of ``[0, 1)``.

For a permutation ``pi`` of ``{1..k}`` and lengths ``lambda_1..lambda_k`` summing
to one, let

    s_j  = sum_{l < j} lambda_l
    s'_j = sum_{l < pi(j)} lambda_{pi^-1(l)}

Under the ``as-written`` convention a point ``x`` in ``[s_j, s_{j+1})`` maps to
``x - s_j + s'_j``, i.e. the subinterval at position ``j`` is moved to position
``pi(j)``. The ``transposed`` convention evaluates the inverse exchange,
``x`` in ``[s'_j, s'_j + lambda_j)`` maps to ``x - s'_j + s_j``.
"""

from __future__ import annotations

import logging
from bisect import bisect_right
from dataclasses import dataclass, replace
from enum import Enum
from itertools import accumulate
from typing import TYPE_CHECKING

from gmpy2 import mpfr

from sequence_graphs.errors import (
    InvalidParam,
    InvalidPermutation,
    LengthsNotNormalized,
    NonpositiveLength,
    OutOfDomain,
)
from sequence_graphs.precision_utils import (
    DEFAULT_PRECISION_BITS,
    to_mpfr,
    working_precision,
)

if TYPE_CHECKING:
    from collections.abc import Sequence
    from fractions import Fraction

module_logger = logging.getLogger(__name__)


class IETConvention(Enum):
    """Which way the permutation moves the subintervals."""

    AS_WRITTEN = "as-written"
    TRANSPOSED = "transposed"

    @property
    def other(self) -> IETConvention:
        if self is IETConvention.AS_WRITTEN:
            return IETConvention.TRANSPOSED
        return IETConvention.AS_WRITTEN


@dataclass(frozen=True)
class IETSpec:
    """An interval exchange transformation with precomputed breakpoints.

    Build instances with `iet_new`. Calling an instance applies it (`iet_apply`).
    """

    perm: tuple[int, ...]
    lengths: tuple[mpfr, ...]
    breakpoints: tuple[mpfr, ...]
    images: tuple[mpfr, ...]
    precision_bits: int = DEFAULT_PRECISION_BITS
    convention: IETConvention = IETConvention.AS_WRITTEN

    @property
    def k(self) -> int:
        return len(self.perm)

    def __call__(self, x: mpfr) -> mpfr:
        return iet_apply(self, x)

    def with_convention(self, convention: IETConvention) -> IETSpec:
        return replace(self, convention=convention)

    def inverse(self) -> IETSpec:
        """The inverse exchange as a spec of its own, ``T_{pi^-1, lambda o pi^-1}``."""
        inverse_perm = [0] * self.k
        for j, target in enumerate(self.perm, start=1):
            inverse_perm[target - 1] = j
        lengths = [self.lengths[source - 1] for source in inverse_perm]
        return iet_new(
            inverse_perm,
            lengths,
            precision_bits=self.precision_bits,
            convention=self.convention,
        )

    def describe(self) -> dict[str, object]:
        """JSON-ready summary."""
        return {
            "permutation": list(self.perm),
            "lengths": [format(x, ".30f") for x in self.lengths],
            "convention": self.convention.value,
            "precision_bits": self.precision_bits,
        }


def _normalization_tolerance(precision_bits: int) -> mpfr:
    with working_precision(precision_bits):
        return mpfr(2) ** (4 - precision_bits)


def iet_new(
    perm: Sequence[int],
    lengths: Sequence[mpfr | int | str],
    *,
    precision_bits: int = DEFAULT_PRECISION_BITS,
    convention: IETConvention = IETConvention.AS_WRITTEN,
) -> IETSpec:
    """Validate an IET and precompute its breakpoints ``s_j`` and images ``s'_j``.

    Parameters
    ----------
    perm : Sequence[int]
        Target positions, a permutation of ``{1..k}``.
    lengths : Sequence[mpfr | int | str]
        Positive subinterval lengths summing to one. Strings are parsed as
        real expressions at `precision_bits` bits.
    precision_bits : int, default=DEFAULT_PRECISION_BITS
        Working precision of the transformation.
    convention : IETConvention, default=IETConvention.AS_WRITTEN
        Orientation used by `iet_apply`.

    Returns
    -------
    IETSpec
        The validated transformation.

    Raises
    ------
    InvalidPermutation
        If `perm` is not a bijection on ``{1..k}``.
    NonpositiveLength
        If some length is not positive.
    LengthsNotNormalized
        If the lengths do not sum to one within ``2^(4-p)``.
    """
    perm = tuple(int(target) for target in perm)
    k = len(perm)
    if k == 0 or sorted(perm) != list(range(1, k + 1)):
        msg = f"{perm} is not a permutation of 1..{k}."
        raise InvalidPermutation(msg)
    if len(lengths) != k:
        msg = f"Expected {k} lengths for a {k}-IET, got {len(lengths)}."
        raise InvalidParam(msg)

    with working_precision(precision_bits):
        values = tuple(to_mpfr(length, precision_bits) for length in lengths)
        for j, length in enumerate(values, start=1):
            if length <= 0:
                msg = f"Length lambda_{j} = {length} is not positive."
                raise NonpositiveLength(msg)

        total = sum(values, mpfr(0))
        if abs(total - 1) > _normalization_tolerance(precision_bits):
            msg = f"Lengths sum to {total}, not 1."
            raise LengthsNotNormalized(msg)

        breakpoints = (mpfr(0), *accumulate(values[:-1]))
        inverse = {target: j for j, target in enumerate(perm, start=1)}
        image_starts = (mpfr(0), *accumulate(values[inverse[ell] - 1] for ell in range(1, k)))
        images = tuple(image_starts[target - 1] for target in perm)

    module_logger.debug("Built %d-IET with permutation %s", k, perm)
    return IETSpec(perm, values, breakpoints, images, precision_bits, convention)


def _check_domain(x: mpfr) -> None:
    if not 0 <= x < 1:
        msg = f"{x} does not lie in [0, 1)."
        raise OutOfDomain(msg)


def iet_apply(T: IETSpec, x: mpfr | Fraction) -> mpfr:
    """Apply `T` to `x`.

    Raises
    ------
    OutOfDomain
        If `x` is not in ``[0, 1)``.
    """
    _check_domain(x)
    with working_precision(T.precision_bits):
        x = mpfr(x)
        if T.convention is IETConvention.AS_WRITTEN:
            j = bisect_right(T.breakpoints, x) - 1
            return x - T.breakpoints[j] + T.images[j]

        order = sorted(range(T.k), key=T.images.__getitem__)
        starts = [T.images[j] for j in order]
        j = order[bisect_right(starts, x) - 1]
        return x - T.images[j] + T.breakpoints[j]


def kronecker_iet(
    theta: mpfr,
    *,
    precision_bits: int = DEFAULT_PRECISION_BITS,
    convention: IETConvention = IETConvention.TRANSPOSED,
) -> IETSpec:
    """The 2-IET ``pi = (2, 1)``, ``lambda = (theta mod 1, 1 - theta mod 1)``.

    Under the ``as-written`` convention it rotates by ``-(theta mod 1)``; the
    ``transposed`` convention rotates by ``+(theta mod 1)`` and reproduces the
    Kronecker sequence from 0.
    """
    with working_precision(precision_bits):
        alpha = mpfr(theta) - int(mpfr(theta))
        if alpha < 0:
            alpha += 1
        return iet_new(
            (2, 1),
            (alpha, 1 - alpha),
            precision_bits=precision_bits,
            convention=convention,
        )

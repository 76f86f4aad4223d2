"""Kronecker sequences ``a_n = n*theta mod 1`` at fixed high precision."""

from __future__ import annotations

import logging
import timeit
from dataclasses import dataclass

import gmpy2
from gmpy2 import mpfr

from sequence_graphs.errors import InvalidParam
from sequence_graphs.precision_utils import (
    DEFAULT_PRECISION_BITS,
    parse_real,
    required_precision,
    separation_threshold,
    to_mpfr,
    working_precision,
)
from sequence_graphs.sequences.sorted_sequence import SortedSequence, check_separation
from sequence_graphs.sequences.values import SeqValue

module_logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class KroneckerParams:
    """Parameters of a Kronecker sequence.

    Parameters
    ----------
    theta : mpfr
        The rotation number, assumed irrational.
    precision_bits : int, default=DEFAULT_PRECISION_BITS
        Requested working precision. Prefix generation raises it to
        ``64 + 2*ceil(log2 N)`` when needed.
    theta_text : str | None, optional
        Source text of `theta` (a named constant, decimal or expression); when
        present, `theta` is re-evaluated at any raised precision.
    """

    theta: mpfr
    precision_bits: int = DEFAULT_PRECISION_BITS
    theta_text: str | None = None

    @classmethod
    def from_text(
        cls,
        text: str,
        precision_bits: int = DEFAULT_PRECISION_BITS,
    ) -> KroneckerParams:
        """Build parameters from a named constant (``golden``, ``sqrt2``) or a
        decimal string."""
        return cls(parse_real(text, precision_bits), precision_bits, text)

    def theta_at(self, precision_bits: int) -> mpfr:
        """`theta` evaluated at `precision_bits` bits."""
        if self.theta_text is not None:
            return parse_real(self.theta_text, precision_bits)
        if precision_bits > self.precision_bits:
            module_logger.warning(
                "theta was given numerically at %d bits; raising the working "
                "precision to %d bits does not add accuracy to it",
                self.precision_bits,
                precision_bits,
            )
        return to_mpfr(self.theta, precision_bits)


def kronecker_terms(theta: mpfr, n_terms: int, precision_bits: int) -> list[SeqValue]:
    """``frac(n*theta)`` for ``n < n_terms`` at `precision_bits` bits."""
    with working_precision(precision_bits):
        theta = mpfr(theta)
        return [
            SeqValue.real(gmpy2.frac(n * theta), precision_bits)
            for n in range(n_terms)
        ]


def kronecker_prefix(params: KroneckerParams, N: int) -> SortedSequence:
    """The first `N` terms of the Kronecker sequence, sorted.

    Parameters
    ----------
    params : KroneckerParams
        The rotation number and requested precision.
    N : int
        Number of terms.

    Returns
    -------
    SortedSequence
        Terms ``frac(n*theta)`` with their sorting permutation.

    Raises
    ------
    InvalidParam
        If `N` is not positive.
    PrecisionInsufficient
        If two terms are closer than ``2^(-p/2)`` at the working precision ``p``.
    """
    if N < 1:
        msg = f"N must be at least 1, got {N}."
        raise InvalidParam(msg)

    precision_bits = required_precision(N, params.precision_bits)
    module_logger.debug("Generating %d Kronecker terms at %d bits", N, precision_bits)
    st_time: float = timeit.default_timer()

    terms = kronecker_terms(params.theta_at(precision_bits), N, precision_bits)
    seq = SortedSequence.from_terms(terms)
    check_separation(seq.terms, seq.pi, separation_threshold(precision_bits))

    elapsed: float = timeit.default_timer() - st_time
    module_logger.info("Sorted %d Kronecker terms in %.3fs", N, elapsed)
    return seq

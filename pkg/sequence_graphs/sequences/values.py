"""Sequence terms tagged with how they may be compared."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import total_ordering

from gmpy2 import mpfr

from sequence_graphs.errors import InvalidParam
from sequence_graphs.precision_utils import MIN_PRECISION_BITS


class ValueKind(Enum):
    RATIONAL = "rational"
    REAL = "real"


@total_ordering
@dataclass(frozen=True, slots=True, eq=False)
class SeqValue:
    """A single term ``a_n`` of a sequence.

    Rational terms are exact `Fraction` values and compare exactly. Real terms are
    `mpfr` values carried at `precision_bits` bits; their comparisons are only
    trusted once the sequence they belong to has passed a separation check.

    Parameters
    ----------
    value : Fraction | mpfr
        The term.
    kind : ValueKind
        How the term compares.
    precision_bits : int | None, optional
        Working precision of a real term, None for rational terms.
    """

    value: Fraction | mpfr
    kind: ValueKind
    precision_bits: int | None = None

    def __post_init__(self) -> None:
        if self.kind is ValueKind.RATIONAL:
            if not isinstance(self.value, Fraction):
                msg = f"Rational terms must be Fractions, got {type(self.value)}."
                raise InvalidParam(msg)
            return
        if self.precision_bits is None or self.precision_bits < MIN_PRECISION_BITS:
            msg = (
                "Real terms need a precision of at least "
                f"{MIN_PRECISION_BITS} bits, got {self.precision_bits}."
            )
            raise InvalidParam(msg)

    @classmethod
    def rational(cls, value: Fraction | int) -> SeqValue:
        return cls(Fraction(value), ValueKind.RATIONAL)

    @classmethod
    def real(cls, value: mpfr, precision_bits: int) -> SeqValue:
        return cls(value, ValueKind.REAL, precision_bits)

    def _check_comparable(self, other: object) -> SeqValue:
        if not isinstance(other, SeqValue):
            return NotImplemented
        if other.kind is not self.kind:
            msg = (
                "Operator not supported between "
                f"{self.kind.value} and {other.kind.value} terms"
            )
            raise TypeError(msg)
        return other

    def __eq__(self, other: object) -> bool:
        checked = self._check_comparable(other)
        if checked is NotImplemented:
            return NotImplemented
        return self.value == checked.value

    def __lt__(self, other: object) -> bool:
        checked = self._check_comparable(other)
        if checked is NotImplemented:
            return NotImplemented
        return self.value < checked.value

    def __hash__(self) -> int:
        return hash((self.kind, self.value))

    def __float__(self) -> float:
        return float(self.value)

    def __str__(self) -> str:
        if self.kind is ValueKind.RATIONAL:
            return str(self.value)
        return format(self.value, ".20f")

    def to_json(self) -> str:
        """Exact string form (``"p/q"`` for rationals, a 40 digit decimal for
        reals)."""
        if self.kind is ValueKind.RATIONAL:
            return str(self.value)
        return format(self.value, ".40f")

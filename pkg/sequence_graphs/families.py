"""The sequence families a sequence graph can be built from."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum, member
from typing import TYPE_CHECKING, Protocol

from sequence_graphs.errors import InvalidParam
from sequence_graphs.iet import orbit_prefix
from sequence_graphs.precision_utils import DEFAULT_PRECISION_BITS
from sequence_graphs.sequences import KroneckerParams, kronecker_prefix, vdc_prefix

if TYPE_CHECKING:
    from sequence_graphs.iet import IETSpec
    from sequence_graphs.sequences import SortedSequence


class PrefixFactory(Protocol):
    def __call__(
        self,
        spec: SequenceSpec,
        N: int,
    ) -> SortedSequence:
        ...


def _kronecker(spec: SequenceSpec, N: int) -> SortedSequence:
    return kronecker_prefix(KroneckerParams.from_text(spec.theta, spec.precision_bits), N)


def _van_der_corput(spec: SequenceSpec, N: int) -> SortedSequence:
    return vdc_prefix(spec.base, N)


def _iet_orbit(spec: SequenceSpec, N: int) -> SortedSequence:
    if spec.iet is None:
        msg = "The iet family needs an IET spec file or preset."
        raise InvalidParam(msg)
    return orbit_prefix(spec.iet, N)


class SequenceFamily(Enum):
    """Enumeration of the sequence families, each generating sorted prefixes."""

    def __call__(
        self,
        spec: SequenceSpec,
        N: int,
    ) -> SortedSequence:
        """Call the associated prefix generator."""
        return self.value(spec, N)  # type: ignore reportGeneralTypeIssues

    KRONECKER = member(_kronecker)
    VDC = member(_van_der_corput)
    IET = member(_iet_orbit)

    @property
    def label(self) -> str:
        return self.name.lower()

    @classmethod
    def from_label(cls, label: str) -> SequenceFamily:
        """Look a family up by its command line name.

        Raises
        ------
        InvalidParam
            If `label` names no family.
        """
        try:
            return cls[label.strip().upper()]
        except KeyError:
            known = ", ".join(family.label for family in cls)
            msg = f"Unknown family {label!r}; expected one of {known}."
            raise InvalidParam(msg) from None


@dataclass(frozen=True)
class SequenceSpec:
    """Which sequence to generate, with the parameters of its family."""

    family: SequenceFamily
    theta: str = "golden"
    base: int = 2
    precision_bits: int = DEFAULT_PRECISION_BITS
    iet: IETSpec | None = None

    def prefix(self, N: int) -> SortedSequence:
        return self.family(self, N)

    def describe(self) -> dict[str, object]:
        match self.family:
            case SequenceFamily.KRONECKER:
                return {"family": "kronecker", "theta": self.theta}
            case SequenceFamily.VDC:
                return {"family": "vdc", "base": self.base}
            case _:
                return {"family": "iet", **(self.iet.describe() if self.iet else {})}

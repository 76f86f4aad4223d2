"""
IET spec files and named example IETs.

A spec file is TOML with a single ``[iet]`` table::

    [iet]
    permutation = [3, 1, 4, 2]
    lengths = ["1/(2*pi)", "1/(4*pi)", "1/(3*pi)", "rest"]
    convention = "as-written"
    precision = 128

Lengths are decimal strings, numbers, or expressions over named constants. The
literal ``"rest"`` may appear once and stands for one minus the other lengths.
"""

from __future__ import annotations

import logging
from typing import TYPE_CHECKING, Any, Final

from gmpy2 import mpfr

from sequence_graphs.errors import InvalidSpecFile
from sequence_graphs.iet.transformation import IETConvention, IETSpec, iet_new
from sequence_graphs.precision_utils import (
    DEFAULT_PRECISION_BITS,
    parse_real,
    working_precision,
)
from sequence_graphs.toml_utils import load_toml, parse_toml, require_table

if TYPE_CHECKING:
    from collections.abc import Mapping, Sequence

    from sequence_graphs.toml_utils import Pathish

module_logger = logging.getLogger(__name__)

REST: Final = "rest"

PRESETS: Final[dict[str, tuple[tuple[int, ...], tuple[str, ...]]]] = {
    "example-4": (
        (3, 1, 4, 2),
        ("1/(2*pi)", "1/(4*pi)", "1/(3*pi)", REST),
    ),
    "example-6": (
        (3, 1, 6, 5, 4, 2),
        ("1/pi", "1/(2*pi)", "1/(3*pi)", "1/(4*pi)", "1/(5*pi)", REST),
    ),
}


def resolve_lengths(
    lengths: Sequence[str | int | float],
    precision_bits: int = DEFAULT_PRECISION_BITS,
) -> list[mpfr]:
    """Evaluate length entries, filling in a single ``"rest"`` entry.

    Raises
    ------
    InvalidSpecFile
        If ``"rest"`` appears more than once.
    """
    texts = [str(length).strip() for length in lengths]
    rest_positions = [j for j, text in enumerate(texts) if text.lower() == REST]
    if len(rest_positions) > 1:
        msg = f"{REST!r} may appear at most once among the lengths, got {texts}."
        raise InvalidSpecFile(msg)

    with working_precision(precision_bits):
        values = [
            None if j in rest_positions else parse_real(text, precision_bits)
            for j, text in enumerate(texts)
        ]
        if rest_positions:
            values[rest_positions[0]] = 1 - sum(
                (value for value in values if value is not None),
                mpfr(0),
            )
    return values


def _convention(value: object) -> IETConvention:
    try:
        return IETConvention(str(value))
    except ValueError:
        known = ", ".join(c.value for c in IETConvention)
        msg = f"Unknown convention {value!r}; expected one of {known}."
        raise InvalidSpecFile(msg) from None


def iet_from_table(
    table: Mapping[str, Any],
    *,
    precision_bits: int | None = None,
    source: str = "IET spec",
) -> IETSpec:
    """Build an `IETSpec` from the contents of an ``[iet]`` table.

    An explicit `precision_bits` overrides the table's ``precision``.

    Raises
    ------
    InvalidSpecFile
        If ``permutation`` or ``lengths`` is missing or not a list.
    """
    permutation = table.get("permutation")
    lengths = table.get("lengths")
    if not isinstance(permutation, list) or not isinstance(lengths, list):
        msg = f"{source} needs list-valued 'permutation' and 'lengths' entries."
        raise InvalidSpecFile(msg)
    if not all(isinstance(target, int) for target in permutation):
        msg = f"{source} permutation must hold integers, got {permutation}."
        raise InvalidSpecFile(msg)

    if precision_bits is None:
        precision_bits = int(table.get("precision", DEFAULT_PRECISION_BITS))
    convention = _convention(table.get("convention", IETConvention.AS_WRITTEN.value))

    return iet_new(
        permutation,
        resolve_lengths(lengths, precision_bits),
        precision_bits=precision_bits,
        convention=convention,
    )


def load_iet_spec(path: Pathish, *, precision_bits: int | None = None) -> IETSpec:
    """Read an IET spec file.

    Raises
    ------
    FileNotFoundError
        If `path` does not exist.
    InvalidSpecFile
        If the file is not a valid spec.
    """
    table = require_table(load_toml(path), "iet", source=str(path))
    module_logger.debug("Loaded IET spec from %s", path)
    return iet_from_table(table, precision_bits=precision_bits, source=str(path))


def parse_iet_spec(text: str, *, precision_bits: int | None = None) -> IETSpec:
    """Read an IET spec from TOML text."""
    table = require_table(parse_toml(text), "iet")
    return iet_from_table(table, precision_bits=precision_bits)


def iet_preset(
    name: str,
    *,
    precision_bits: int = DEFAULT_PRECISION_BITS,
    convention: IETConvention = IETConvention.AS_WRITTEN,
) -> IETSpec:
    """One of the named example IETs in `PRESETS`.

    Raises
    ------
    InvalidSpecFile
        If `name` is unknown.
    """
    try:
        permutation, lengths = PRESETS[name]
    except KeyError:
        known = ", ".join(sorted(PRESETS))
        msg = f"Unknown IET preset {name!r}; known presets are {known}."
        raise InvalidSpecFile(msg) from None
    return iet_new(
        permutation,
        resolve_lengths(lengths, precision_bits),
        precision_bits=precision_bits,
        convention=convention,
    )

"""
Utilities for reading TOML configuration files.

IET spec files and command line run-config files are both TOML; these helpers
load them and walk their tables, turning parse failures into `InvalidSpecFile`.
"""

from __future__ import annotations

from os import PathLike
from pathlib import Path
from typing import TYPE_CHECKING, Any

import tomlkit
from tomlkit.container import Container
from tomlkit.exceptions import ParseError
from tomlkit.items import Item, Table

from sequence_graphs.errors import InvalidSpecFile
from sequence_graphs.file_utils import make_file_not_found_error

if TYPE_CHECKING:
    from collections.abc import Sequence

    from tomlkit import TOMLDocument


Pathish = str | PathLike[str] | Path
Containerish = Container | Table


def load_toml(
    path: Pathish,
) -> TOMLDocument:
    """Loads a toml file into memory.

    Parameters
    ----------
    path : Pathish
        The path to the toml file.

    Returns
    -------
    TOMLDocument
        The loaded toml document.

    Raises
    ------
    FileNotFoundError
        If `path` does not exist.
    InvalidSpecFile
        If the file is not valid TOML.
    """
    path = Path(path)
    if not path.is_file():
        raise make_file_not_found_error(path)
    try:
        with path.open(mode="rb") as f:
            return tomlkit.load(f)
    except ParseError as e:
        msg = f"Could not parse {path} as TOML: {e}"
        raise InvalidSpecFile(msg) from e


def parse_toml(text: str) -> TOMLDocument:
    """Parses toml text, raising `InvalidSpecFile` on malformed input."""
    try:
        return tomlkit.parse(text)
    except ParseError as e:
        msg = f"Could not parse TOML text: {e}"
        raise InvalidSpecFile(msg) from e


def _get_toml_or_none(
    toml: Containerish,
    key: str,
) -> Item | Container | None:
    if key not in toml:
        return None
    return toml[key]


def _walk(
    toml: Containerish,
    key_chain: str | Sequence[str],
) -> Item | Container | None:
    current = toml
    if isinstance(key_chain, str):
        key_chain = [key_chain]

    for key in key_chain:
        if current is None or not isinstance(current, Containerish):
            # Exhausted early
            return None
        current = _get_toml_or_none(current, key)
    return current


def get_toml_container(
    toml: Containerish,
    key_chain: str | Sequence[str],
) -> Containerish | None:
    current = _walk(toml, key_chain)
    return current if isinstance(current, Containerish) else None


def require_table(
    toml: Containerish,
    key: str,
    *,
    source: str = "TOML document",
) -> dict[str, Any]:
    """The table at `key` as plain Python values.

    Raises
    ------
    InvalidSpecFile
        If there is no table at `key`.
    """
    table = get_toml_container(toml, key)
    if table is None:
        msg = f"{source} has no [{key}] table."
        raise InvalidSpecFile(msg)
    return table.unwrap()

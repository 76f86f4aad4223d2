"""A module for the file operations of the command line front end."""
from __future__ import annotations

import errno
import json
import logging
import os
from pathlib import Path
from typing import TYPE_CHECKING, Any

if TYPE_CHECKING:
    from os import PathLike

    Pathish = str | PathLike[str] | Path

module_logger = logging.getLogger(__name__)


def make_file_not_found_error(file_not_found: Path) -> FileNotFoundError:
    """Return a FileNotFoundError instance with standard errno and message."""
    return FileNotFoundError(
        errno.ENOENT,
        os.strerror(errno.ENOENT),
        str(file_not_found),
    )


def dumps_json(data: Any) -> str:  # noqa: ANN401
    """Deterministic JSON text: sorted keys, fixed separators, trailing newline."""
    return json.dumps(data, sort_keys=True, indent=2, separators=(",", ": ")) + "\n"


def write_text(text: str, path: Pathish | None) -> Path | None:
    """Write `text` to `path`, creating parent directories, or to stdout when
    `path` is None.

    Returns
    -------
    Path | None
        The file written, None for stdout.
    """
    if path is None:
        print(text, end="")  # noqa: T201
        return None

    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8", newline="\n")
    module_logger.info("Wrote %d characters to %s", len(text), path)
    return path


from __future__ import annotations

import logging
from enum import Enum
from functools import total_ordering
from pathlib import Path
from typing import TYPE_CHECKING

from rich.console import Console
from rich.logging import RichHandler

if TYPE_CHECKING:
    from rich.style import Style

    from sequence_graphs.toml_utils import Pathish


@total_ordering
class MessageLevel(Enum):
    CRITICAL = (50, "bold bright_magenta")
    ERROR = (40, "bright_red")
    WARNING = (30, "bright_yellow")
    INFO = (20, "bright_green")
    DEBUG = (10, "bright_cyan")

    def __lt__(self, other: object) -> bool:
        if isinstance(other, MessageLevel):
            return self.val < other.val
        msg = (
            "Operator '<' not supported between instances of "
            f"{type(self)} and {type(other)}"
        )
        raise TypeError(msg)

    @property
    def val(self) -> int:
        return self.value[0]

    @property
    def style(self) -> str:
        return self.value[1]

    @classmethod
    def from_verbosity(cls, verbosity: int) -> MessageLevel:
        """``-v`` shows INFO, ``-vv`` and more show DEBUG."""
        if verbosity >= 2:  # noqa: PLR2004
            return cls.DEBUG
        if verbosity == 1:
            return cls.INFO
        return cls.WARNING


class ConsoleLogger:
    """Routes package logging through rich, to a log file or to stderr.

    Parameters
    ----------
    log_file_path : Pathish | None, optional
        File receiving every record at `log_level`; stderr when None.
    print_level : MessageLevel, default=MessageLevel.WARNING
        Threshold for messages printed through `print` helpers.
    log_level : MessageLevel, default=MessageLevel.WARNING
        Threshold for records reaching the handler.
    """

    def __init__(
        self,
        log_file_path: Pathish | None = None,
        *,
        print_level: MessageLevel = MessageLevel.WARNING,
        log_level: MessageLevel = MessageLevel.WARNING,
    ) -> None:
        if log_file_path is None:
            log_console = Console(stderr=True, width=120)
        else:
            self._log_file = Path(log_file_path).open("w", encoding="utf-8")  # noqa: SIM115
            log_console = Console(file=self._log_file, width=120)

        FORMAT = "%(message)s"
        logging.basicConfig(
            level=log_level.val,
            format=FORMAT,
            datefmt="[%X]",
            handlers=[
                RichHandler(console=log_console, rich_tracebacks=True),
            ],
            force=True,
        )

        self.console = Console(stderr=True)
        self.logs_to_file = log_file_path is not None
        self.logger = logging.getLogger("sequence_graphs")
        self.print_level = print_level
        self.log_level = log_level

    def print(self, msg: str = "", style: str | Style | None = None) -> None:
        self.console.print(msg, style=style)

    def log(self, msg: str, message_level: MessageLevel) -> None:
        self.logger.log(message_level.val, msg)

    def _print_log(self, msg: str, message_level: MessageLevel) -> None:
        if self.print_level <= message_level:
            self.print(msg, style=message_level.style)
        if self.logs_to_file and self.log_level <= message_level:
            self.log(msg, message_level)

    def error(self, msg: str) -> None:
        self._print_log(msg, MessageLevel.ERROR)

    def warning(self, msg: str) -> None:
        self._print_log(msg, MessageLevel.WARNING)

    def info(self, msg: str) -> None:
        self._print_log(msg, MessageLevel.INFO)

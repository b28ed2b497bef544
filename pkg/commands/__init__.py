# Command groups are wired up in cli.py
from __future__ import annotations

import sys
from dataclasses import dataclass, field
from typing import TextIO

from milnorkit import Guards, ReportFormatter


@dataclass
class CommandContext:
    """Settings resolved from flags, environment and defaults for one invocation."""

    cap: int
    guards: Guards
    formatter: ReportFormatter
    out: TextIO = field(default_factory=lambda: sys.stdout)

    def emit(self, text: str) -> None:
        self.out.write(text + "\n")

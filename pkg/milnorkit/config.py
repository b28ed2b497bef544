from __future__ import annotations

import logging
import os
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, Optional

from dotenv import load_dotenv

BASE_DIR = Path(__file__).resolve().parent.parent

DEFAULT_CAP = 8
DEFAULT_GUARD_TERMS = 500_000
DEFAULT_GUARD_LETTERS = 1_000_000
LOG_FORMAT = "%(asctime)s | %(name)s | %(levelname)s | %(message)s"


@dataclass(frozen=True)
class Guards:
    """Resource limits for the nilpotent iteration."""

    max_terms: int = DEFAULT_GUARD_TERMS
    max_letters: int = DEFAULT_GUARD_LETTERS


def _maybe_int(value: Optional[str]) -> Optional[int]:
    if value is None or value == "":
        return None
    try:
        return int(value)
    except (TypeError, ValueError):
        return None


def _env(name: str) -> Optional[str]:
    return os.getenv(name) or os.getenv(name.lower())


def load_config() -> Dict[str, Any]:
    load_dotenv()
    cap = _maybe_int(_env("MILNORKIT_CAP"))
    guard_terms = _maybe_int(_env("MILNORKIT_GUARD_TERMS"))
    guard_letters = _maybe_int(_env("MILNORKIT_GUARD_LETTERS"))
    config = {
        "cap": cap if cap is not None else DEFAULT_CAP,
        "guard_terms": guard_terms if guard_terms is not None else DEFAULT_GUARD_TERMS,
        "guard_letters": (
            guard_letters if guard_letters is not None else DEFAULT_GUARD_LETTERS
        ),
        "log_file": _env("MILNORKIT_LOG_FILE"),
        "log_level": (_env("MILNORKIT_LOG_LEVEL") or "WARNING").upper(),
    }
    return config


def setup_logging(log_file: Optional[str], level: str = "WARNING") -> None:
    handlers: list[logging.Handler] = [logging.StreamHandler()]
    if log_file:
        Path(log_file).parent.mkdir(parents=True, exist_ok=True)
        handlers.append(logging.FileHandler(log_file, encoding="utf-8"))
    logging.basicConfig(
        level=getattr(logging, level.upper(), logging.WARNING),
        format=LOG_FORMAT,
        handlers=handlers,
        force=True,
    )

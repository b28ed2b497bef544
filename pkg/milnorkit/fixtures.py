"""Access to the link diagrams shipped under ``links/``."""

from __future__ import annotations

from pathlib import Path
from typing import Any, Dict, List, Union

from .config import BASE_DIR
from .diagram import LinkDiagram, load_diagram, read_document
from .errors import DiagramError

LINKS_DIR = BASE_DIR / "links"

# Surgery presentations of the doubled family, indexed by family member.
FAMILY_FILES = {1: "whitehead", 2: "k2", 3: "k3"}


def bundled_names() -> List[str]:
    return sorted(path.stem for path in LINKS_DIR.glob("*.json"))


def bundled_path(name: str) -> Path:
    path = LINKS_DIR / f"{name}.json"
    if not path.is_file():
        known = ", ".join(bundled_names())
        raise DiagramError(f"no bundled diagram named {name!r} (known: {known})")
    return path


def load_bundled_document(name: str) -> Dict[str, Any]:
    return read_document(bundled_path(name))


def load_bundled(name: str) -> LinkDiagram:
    return load_diagram(bundled_path(name))


def resolve_source(text: str) -> Union[str, Path]:
    """A file path, inline JSON, or the name of a bundled diagram."""
    if text.lstrip().startswith("{") or Path(text).is_file():
        return text
    if (LINKS_DIR / f"{text}.json").is_file():
        return LINKS_DIR / f"{text}.json"
    raise DiagramError(f"no such file or bundled diagram: {text}")

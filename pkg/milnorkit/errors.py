from __future__ import annotations

from typing import List, Optional, Sequence, Union


class MilnorKitError(Exception):
    """Base class for every error raised by milnorkit."""


class WordSyntaxError(MilnorKitError):
    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"{message} (at position {position})")
        self.message = message
        self.position = position


class GeneratorRangeError(MilnorKitError):
    def __init__(self, index: int, limit: int) -> None:
        super().__init__(f"generator x{index} outside 1..{limit}")
        self.index = index
        self.limit = limit


class SeriesMismatchError(MilnorKitError):
    pass


class DegreeError(MilnorKitError):
    pass


class DiagramError(MilnorKitError):
    """A rejected diagram. ``location`` names the crossing or label at fault."""

    def __init__(self, message: str, location: Optional[str] = None) -> None:
        text = f"{location}: {message}" if location else message
        super().__init__(text)
        self.message = message
        self.location = location


class ResourceGuardError(MilnorKitError):
    def __init__(self, resource: str, limit: int, observed: int) -> None:
        super().__init__(
            f"resource guard exceeded: {resource} reached {observed} (limit {limit})"
        )
        self.resource = resource
        self.limit = limit
        self.observed = observed


class HypothesisError(MilnorKitError):
    """A surgery presentation that cannot be used to read off D(K)."""

    def __init__(self, failures: Union[str, Sequence[str]]) -> None:
        items: List[str] = [failures] if isinstance(failures, str) else list(failures)
        super().__init__("; ".join(items))
        self.failures = items


class ComputationError(MilnorKitError):
    pass

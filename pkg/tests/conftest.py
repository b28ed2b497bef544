"""Pytest configuration and fixtures for milnorkit tests."""

import random
import sys
from pathlib import Path

import pytest

# Add project root to path
ROOT_DIR = Path(__file__).resolve().parent.parent
if str(ROOT_DIR) not in sys.path:
    sys.path.insert(0, str(ROOT_DIR))

from milnorkit.config import Guards  # noqa: E402
from milnorkit.fixtures import load_bundled  # noqa: E402


def pytest_configure(config):
    """Register custom markers."""
    config.addinivalue_line(
        "markers",
        "slow: marks tests that run the deeper doubled-family computations",
    )


@pytest.fixture
def bundled():
    """Loader for the diagrams shipped under links/."""
    return load_bundled


@pytest.fixture
def rng():
    """Seeded generator so random words are reproducible."""
    return random.Random(20240611)


@pytest.fixture
def guards():
    return Guards()


@pytest.fixture
def random_word(rng):
    """Factory for freely reduced random words in n generators."""
    from milnorkit.freegroup import Word

    def make(n_vars: int, length: int) -> Word:
        letters = [rng.choice([1, -1]) * rng.randint(1, n_vars) for _ in range(length)]
        return Word(tuple(letters))

    return make

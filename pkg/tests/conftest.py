import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from helpers import worked_example_channels, worked_example_network  # noqa: E402

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture
def example_channels():
    return worked_example_channels()


@pytest.fixture
def example_network():
    return worked_example_network()


@pytest.fixture
def events_fixture() -> Path:
    return FIXTURES / "events_sample.jsonl"


@pytest.fixture
def bots_fixture() -> Path:
    return FIXTURES / "bots.txt"

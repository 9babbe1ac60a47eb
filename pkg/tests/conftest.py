import os
from pathlib import Path

# keep test runs from writing the service log file
os.environ["LOG_FILE"] = ""

import pytest

from src.core.models import Relation

GOLDEN = Path(__file__).parent / "golden"


@pytest.fixture
def golden_dir() -> Path:
    return GOLDEN


@pytest.fixture
def linear_order3() -> Relation:
    return Relation.of(3, [(0, 1), (0, 2), (1, 2)])


@pytest.fixture
def path3() -> Relation:
    return Relation.of(3, [(0, 1), (1, 2)])


@pytest.fixture
def cycle3() -> Relation:
    return Relation.of(3, [(0, 1), (1, 2), (2, 0)])


@pytest.fixture
def empty2() -> Relation:
    return Relation.empty(2)

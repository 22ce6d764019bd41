from pathlib import Path

import pytest

from graphs.io import read_graph

FIXTURES = Path(__file__).parent.parent / "fixtures"


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture
def fixture_graph():
    """Загрузка графа из fixtures/ тем же разборщиком, что и в CLI."""
    def load(name: str):
        return read_graph(FIXTURES / f"{name}.txt")
    return load

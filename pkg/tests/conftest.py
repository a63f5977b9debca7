# tests/conftest.py
import logging
import sys
from pathlib import Path

import pytest

# Add project root to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from core.graph import (
    Graph,
    fixture_mnc_counterexample,
    fixture_tree_mnc_counterexample,
    fixture_weighted_spider,
)


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(1, n)])


def star_graph(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, [(1, i) for i in range(2, leaves + 2)])


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i % n + 1) for i in range(1, n + 1)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)])


@pytest.fixture
def p4() -> Graph:
    return path_graph(4)


@pytest.fixture
def triangle() -> Graph:
    return cycle_graph(3)


@pytest.fixture
def mnc_counterexample() -> Graph:
    return fixture_mnc_counterexample()


@pytest.fixture
def tree_counterexample() -> Graph:
    return fixture_tree_mnc_counterexample()


@pytest.fixture
def weighted_spider() -> Graph:
    return fixture_weighted_spider()


@pytest.fixture
def unit_spider() -> Graph:
    return fixture_weighted_spider().with_unit_weights()


@pytest.fixture
def write_graph_text(tmp_path):
    """Write graph-file text to a temp file and return its path."""

    def _write(text: str, name: str = "graph.txt") -> str:
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    return _write


@pytest.fixture
def runner():
    """CliRunner that restores root logging, which the CLI reconfigures per run."""
    from click.testing import CliRunner

    root = logging.getLogger()
    handlers, level = root.handlers[:], root.level
    yield CliRunner()
    root.handlers[:] = handlers
    root.setLevel(level)

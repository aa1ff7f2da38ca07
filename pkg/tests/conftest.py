import contextlib
import sys
from pathlib import Path

import pytest

from wcomplexity.graph import WeightedGraph, complete_graph

sys.path.insert(0, str(Path(__file__).parent))

_ACCEPTANCE: list[tuple[str, bool, str]] = []


@contextlib.contextmanager
def _criterion(label: str):
    info = {"detail": ""}
    try:
        yield info
    except BaseException:
        _ACCEPTANCE.append((label, False, info["detail"]))
        raise
    _ACCEPTANCE.append((label, True, info["detail"]))


@pytest.fixture
def criterion():
    return _criterion


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label, ok, detail in _ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {label}{'  ' + detail if detail else ''}")


@pytest.fixture
def k3w():
    """K_3 with weights 1, 2, 3 on edges 12, 13, 23."""
    return WeightedGraph.from_edges(3, [(1, 2), (1, 3), (2, 3)], [1, 2, 3])


@pytest.fixture
def k3():
    return complete_graph(3)


@pytest.fixture
def k4():
    return complete_graph(4)

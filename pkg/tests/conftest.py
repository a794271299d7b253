import numpy as np
import pytest

from commbench import Graph


@pytest.fixture
def two_triangles() -> Graph:
    return Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])


@pytest.fixture
def two_edges() -> Graph:
    return Graph.from_edges(4, [(0, 1), (2, 3)])


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(12345)


def pytest_terminal_summary(terminalreporter):
    import sys

    acceptance = sys.modules.get("test_acceptance")
    if acceptance is None or not acceptance.OUTCOMES:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(acceptance.OUTCOMES):
        terminalreporter.write_line(acceptance.OUTCOMES[number])

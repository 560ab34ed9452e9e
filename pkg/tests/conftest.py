import pytest

from bpglab.graph import Graph


def G(n, *edges):
    return Graph.from_edges(n, edges)


@pytest.fixture
def mk():
    return G

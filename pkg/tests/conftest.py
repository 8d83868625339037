import itertools

import pytest

from facecover import Instance, MultiGraph


def cycle(n, terminals=None):
    edges = [(i, i % n + 1) for i in range(1, n + 1)]
    terms = range(1, n + 1) if terminals is None else terminals
    return MultiGraph.from_edges(edges, terminals=terms)


def complete(n, terminals=()):
    return MultiGraph.from_edges(list(itertools.combinations(range(1, n + 1), 2)), terminals=terminals)


def wheel(rim, terminals=()):
    """Hub 1, rim 2..rim+1."""
    edges = [(1, v) for v in range(2, rim + 2)]
    edges += [(v, v + 1) for v in range(2, rim + 1)] + [(2, rim + 1)]
    return MultiGraph.from_edges(edges, terminals=terminals)


@pytest.fixture
def k4_all():
    return Instance(complete(4, range(1, 5)), 1)


@pytest.fixture
def instance_text():
    return "c six-cycle\np facecover 6 6 6 1\ne 1 2\ne 1 6\ne 2 3\ne 3 4\ne 4 5\ne 5 6\nt 1\nt 2\nt 3\nt 4\nt 5\nt 6\n"

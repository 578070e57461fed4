"""
Shared fixtures: small named hypergraphs and seeded random instances.
"""

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent.parent))
sys.path.insert(0, str(Path(__file__).parent))

from generators import bipartite_hedgehog, complete_kpartite, random_kpartite  # noqa: E402
from hgraph import Hypergraph, PartiteLayout  # noqa: E402


def graph(n, edges):
    return Hypergraph(k=2, n=n, edges=edges)


def cycle(n):
    return graph(n, [(i, (i + 1) % n) for i in range(n)])


def partite(k, parts, edges):
    return Hypergraph(k=k, n=sum(len(p) for p in parts), edges=edges, layout=PartiteLayout(parts=parts), partite_proper=True)


@pytest.fixture
def triangle():
    return graph(3, [(0, 1), (1, 2), (0, 2)])


@pytest.fixture
def c4():
    return cycle(4)


@pytest.fixture
def c5():
    return cycle(5)


@pytest.fixture
def k22():
    return complete_kpartite([2, 2])


@pytest.fixture
def single_edge3():
    return Hypergraph(k=3, n=3, edges=[(0, 1, 2)])


@pytest.fixture
def hedgehog3():
    return bipartite_hedgehog(3, 3)


@pytest.fixture
def dense_bipartite():
    """K_{6,6}: the easiest host for pruning and embedding."""
    return complete_kpartite([6, 6])


@pytest.fixture
def random_bipartite():
    return random_kpartite([8, 8], 0.7, seed=11)

import random

import pytest

from satforge.construction import build_construction
from satforge.graph import Graph
from satforge.search import enumerate_saturated


@pytest.fixture(scope="session")
def family():
    """Constructed family members for n = 9..30, keyed by n."""
    return {n: build_construction(n)[0] for n in range(9, 31)}


@pytest.fixture(scope="session")
def extremal9():
    """Complete minimum search for 6-cycle saturation at n = 9."""
    res = enumerate_saturated(9, 6)
    assert res.status == "complete"
    return res


@pytest.fixture(scope="session")
def corpus(family, extremal9):
    """Audit corpus: the construction family plus every n = 9 extremal."""
    return list(family.values()) + list(extremal9.graphs)


def random_connected_graph(rng, n_max=12):
    """Random connected graph: a random spanning tree plus random extra edges."""
    n = rng.randint(2, n_max)
    edges = set()
    order = list(range(n))
    rng.shuffle(order)
    for i in range(1, n):
        a = order[rng.randrange(i)]
        edges.add(tuple(sorted((a, order[i]))))
    extra = rng.randint(0, n)
    for _ in range(extra):
        u, v = rng.sample(range(n), 2)
        edges.add(tuple(sorted((u, v))))
    return Graph.from_edges(n, edges)


@pytest.fixture()
def rng():
    return random.Random(0xC6)

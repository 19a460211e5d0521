import random

import pytest

from polytuple.hypergraph import AbstractHypergraph


def random_hypergraph(rng: random.Random, n: int, m: int, p: float = 0.5) -> AbstractHypergraph:
    edges = []
    for _ in range(m):
        edges.append([v for v in range(n) if rng.random() < p])
    return AbstractHypergraph.from_edges(n, edges)


@pytest.fixture
def rng():
    return random.Random(20240611)

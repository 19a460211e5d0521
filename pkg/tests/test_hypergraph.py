import random
from itertools import combinations

import numpy as np
import pytest
from conftest import random_hypergraph

from polytuple.errors import InputError, ResourceError
from polytuple.hypergraph import (
    AbstractHypergraph,
    depth_of,
    depth_table_bruteforce,
    is_shrinkable,
    max_deep_tuple,
    project,
    sauer_shelah_check,
    tuple_depth_table,
    vc_dimension,
)


def H(n, edges):
    return AbstractHypergraph.from_edges(n, edges)


def complete(n):
    return H(n, [c for r in range(n + 1) for c in combinations(range(n), r)])


def test_edges_are_deduplicated_and_sorted():
    h = H(4, [[2, 1], [1, 2], [0]])
    assert h.edges == [(0,), (1, 2)]
    assert len(h) == 2


def test_rejects_out_of_range():
    with pytest.raises(InputError):
        H(3, [[0, 3]])
    with pytest.raises(InputError):
        depth_of(H(3, [[0, 1]]), [0, 5])


def test_depth_examples():
    h = H(4, [[0, 1, 2]])
    assert depth_of(h, [0, 1]) == 1
    assert depth_of(h, [2, 3]) == 2


def test_project_examples():
    h2, idx = project(H(3, [[0, 1], [1, 2]]), [1, 2])
    assert idx == (1, 2)
    assert h2.edges == [(0,), (0, 1)]
    h = H(4, [[0, 1], [1, 2, 3], [0, 1]])
    assert project(h, range(4))[0] == h


def test_vc_examples():
    assert vc_dimension(complete(3)) == 3
    assert vc_dimension(H(2, [[0, 1]])) == 0
    assert vc_dimension(H(3, [])) == 0


def test_vc_cap_and_budget():
    assert vc_dimension(complete(4), cap=2) == 2
    with pytest.raises(ResourceError):
        vc_dimension(complete(6), budget=3)


def test_shrinkable_examples():
    assert is_shrinkable(H(3, [[0], [0, 1], [0, 1, 2]])) == (True, None)
    assert is_shrinkable(H(3, [[0, 1, 2]])) == (False, ((0, 1, 2), 1))


def test_sauer_shelah_examples():
    assert sauer_shelah_check(complete(3))
    assert sauer_shelah_check(H(2, [[0, 1]]))


def test_depth_table_examples():
    D = tuple_depth_table(H(3, [[0, 1, 2]]), 2)
    assert [d for _, d in D.items()] == [1, 1, 1]
    D = tuple_depth_table(H(4, []), 2)
    assert set(D.depths.tolist()) == {2}
    assert max_deep_tuple(H(4, []), 2) == ((0, 1), 2)


def test_depth_table_rejects_bad_t():
    with pytest.raises(InputError):
        tuple_depth_table(H(3, []), 4)
    with pytest.raises(ResourceError):
        tuple_depth_table(H(30, []), 10, budget=1000)


def test_depth_table_matches_scan_on_1000_instances():
    rng = random.Random(1)
    for _ in range(1000):
        n = rng.randint(3, 8)
        h = random_hypergraph(rng, n, rng.randint(0, 12), rng.random())
        t = rng.randint(1, min(3, n))
        assert np.array_equal(tuple_depth_table(h, t).depths, depth_table_bruteforce(h, t).depths)


def test_max_deep_tuple_is_table_max():
    rng = random.Random(2)
    for _ in range(50):
        h = random_hypergraph(rng, 9, 15)
        tup, d = max_deep_tuple(h, 2)
        assert d == tuple_depth_table(h, 2).depths.max()
        assert depth_of(h, tup) == d


def test_projection_monotonicity_200():
    rng = random.Random(3)
    for _ in range(200):
        n = rng.randint(4, 12)
        h = random_hypergraph(rng, n, rng.randint(1, 20))
        X = sorted(rng.sample(range(n), rng.randint(2, n)))
        hp, index = project(h, X)
        assert vc_dimension(hp) <= vc_dimension(h)
        S = sorted(rng.sample(range(len(X)), 2))
        assert depth_of(hp, S) <= depth_of(h, [index[i] for i in S])


def test_sauer_shelah_random():
    rng = random.Random(4)
    for _ in range(200):
        h = random_hypergraph(rng, rng.randint(1, 10), rng.randint(0, 40), rng.random())
        assert sauer_shelah_check(h)

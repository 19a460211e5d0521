import random
from itertools import combinations, product
from math import comb

import numpy as np
import pytest
from conftest import random_hypergraph

from polytuple.colorings import TupleColoring, combination_coloring, cyclic_vertex_coloring, lower_bound_f
from polytuple.errors import SearchIndeterminate
from polytuple.generators import gen_random_general_position
from polytuple.geometry import PointSet, enumerate_ranges
from polytuple.hypergraph import AbstractHypergraph, is_shrinkable
from polytuple.search import (
    SearchBudget,
    exact_f,
    exists_polychromatic,
    find_vertex_coloring,
    verify_polychromatic,
)


def H(n, edges):
    return AbstractHypergraph.from_edges(n, edges)


K4_PAIRS = H(4, combinations(range(4), 2))


def test_verify_examples():
    h = H(5, [[0, 1, 2, 3]])
    C = TupleColoring.constant(5, 2, 2)
    assert verify_polychromatic(h, C, 5).ok
    rep = verify_polychromatic(h, C, 3)
    assert not rep.ok and rep.violations[0].edge == (0, 1, 2, 3) and rep.violations[0].missing_colors == [1]
    assert rep.edges_checked == 1


def test_verify_small_edges_vacuous():
    h = H(4, [[0], [3]])
    assert verify_polychromatic(h, TupleColoring.constant(4, 2, 2), 1).ok
    # an edge of size t holds one tuple and can never see two colors
    rep = verify_polychromatic(H(4, [[0], [1, 2]]), TupleColoring.constant(4, 2, 2), 1)
    assert [v.edge for v in rep.violations] == [(1, 2)]


def test_verify_paths_agree():
    rng = random.Random(3)
    for t in (1, 2, 3):
        for _ in range(30):
            h = random_hypergraph(rng, 8, 10)
            C = TupleColoring(8, t, 3, [rng.randrange(3) for _ in range(comb(8, t))])
            rep = verify_polychromatic(h, C, 2)
            for e in h.edges:
                if len(e) < max(2, t):
                    continue
                seen = {C.color(T) for T in combinations(e, t)}
                bad = [v for v in rep.violations if v.edge == e]
                assert (len(seen) < 3) == bool(bad)
                if bad:
                    assert bad[0].missing_colors == sorted(set(range(3)) - seen)


def test_exists_examples():
    C = exists_polychromatic(H(3, [[0, 1, 2]]), 1, 2, 3)
    assert C is not None and verify_polychromatic(H(3, [[0, 1, 2]]), C, 3).ok
    assert exists_polychromatic(K4_PAIRS, 1, 2, 2) is None
    P = gen_random_general_position(8, 500, 1)
    hp = enumerate_ranges(P, "halfplanes2d")
    C = exists_polychromatic(hp, 2, 2, 3)
    assert C is not None and verify_polychromatic(hp, C, 3).ok


def test_exact_f_examples():
    assert exact_f(H(3, [[0, 1, 2]]), 1, 2) == 1
    assert exact_f(K4_PAIRS, 1, 2) == 3
    assert exact_f(H(5, []), 2, 2) == 1
    P = gen_random_general_position(10, 500, 2)
    assert exact_f(enumerate_ranges(P, "halfplanes2d"), 2, 2) == 3


def test_find_vertex_coloring_examples():
    assert find_vertex_coloring(K4_PAIRS, 2, 2) is None
    I = enumerate_ranges(PointSet([(v,) for v in range(9)]), "intervals1d")
    vc = find_vertex_coloring(I, 3, 3)
    assert vc is not None and verify_polychromatic(I, vc.as_tuple_coloring(), 3).ok
    P = gen_random_general_position(14, 1000, 5)
    assert find_vertex_coloring(enumerate_ranges(P, "halfplanes2d"), 2, 3) is not None


def test_indeterminate_is_not_none():
    I = enumerate_ranges(PointSet([(v,) for v in range(30)]), "intervals1d")
    with pytest.raises(SearchIndeterminate):
        exists_polychromatic(I, 2, 6, 4, SearchBudget(max_nodes=50))


def _brute_exists(h, t, k, f):
    tuples = list(combinations(range(h.n), t))
    edges = [e for e in h.edges if len(e) >= max(f, t)]
    for cols in product(range(k), repeat=len(tuples)):
        col = dict(zip(tuples, cols))
        if all(len({col[T] for T in combinations(e, t)}) == k for e in edges):
            return True
    return False


def test_exists_agrees_with_brute_force():
    rng = random.Random(4)
    cases = 0
    for _ in range(200):
        n = rng.randint(2, 6)
        t = rng.randint(1, 2)
        if comb(n, t) > 15:
            n = 5
        h = random_hypergraph(rng, n, rng.randint(0, 6), rng.uniform(0.3, 0.9))
        f = rng.randint(1, n)
        got = exists_polychromatic(h, t, 2, f)
        assert (got is not None) == _brute_exists(h, t, 2, f)
        if got is not None:
            assert verify_polychromatic(h, got, f).ok
        cases += 1
    assert cases == 200


def test_exact_f_monotone_under_edge_addition():
    rng = random.Random(5)
    for _ in range(40):
        h = random_hypergraph(rng, 6, 4, 0.6)
        extra = random_hypergraph(rng, 6, 2, 0.6)
        bigger = AbstractHypergraph(6, h.masks + extra.masks)
        assert exact_f(bigger, 2, 2) >= exact_f(h, 2, 2)


def test_exact_f_at_least_t_plus_one_on_shrinkable():
    rng = random.Random(6)
    checked = 0
    for _ in range(60):
        h = random_hypergraph(rng, 6, 3, 0.7)
        edges = set(h.masks)
        for e in list(edges):
            while e:
                e &= e - 1
                edges.add(e)
        h = AbstractHypergraph(6, edges)
        assert is_shrinkable(h)[0]
        for t in (1, 2):
            if any(e.bit_count() >= t + 1 for e in h.masks):
                assert exact_f(h, t, 2) >= t + 1
                checked += 1
    assert checked > 0


def test_exact_f_respects_lower_bound():
    I = enumerate_ranges(PointSet([(v,) for v in range(12)]), "intervals1d")
    for t, k in [(1, 3), (2, 3), (2, 4)]:
        assert exact_f(I, t, k) >= lower_bound_f(t, k).combinatorial


def test_cyclic_interval_coloring_is_valid():
    I = enumerate_ranges(PointSet([(v,) for v in range(20)]), "intervals1d")
    for x in (2, 3, 5):
        vc = cyclic_vertex_coloring(range(20), x)
        assert verify_polychromatic(I, vc.as_tuple_coloring(), x).ok
        C = combination_coloring(vc, 2, 3) if x >= 3 else None
        if C is not None:
            assert verify_polychromatic(I, C, x).ok

import random
from fractions import Fraction
from itertools import combinations
from math import comb

import numpy as np
import pytest
from conftest import random_hypergraph

from polytuple.colorings import (
    LLLParams,
    TupleColoring,
    VertexColoring,
    balls_tuple_coloring,
    combination_coloring,
    combination_vertex_colors,
    cyclic_vertex_coloring,
    depth_threshold_coloring,
    disks_pair_coloring,
    lll_grid_pair_coloring,
    lll_threshold,
    lll_tuple_coloring,
    lower_bound_f,
    parity_coloring,
    vc_tuple_coloring,
)
from polytuple.colorings.lll import ranges_at_least
from polytuple.colorings.threshold import DISK_BASE, ball_base, guaranteed_size, vc_base
from polytuple.errors import InputError, NonTerminationError
from polytuple.generators import gen_grid, gen_random_general_position
from polytuple.geometry import PointSet, enumerate_ranges
from polytuple.hypergraph import AbstractHypergraph, DepthTable, is_shrinkable, tuple_depth_table
from polytuple.search import verify_polychromatic


def table(depths, n=None, t=1):
    depths = np.asarray(depths)
    return DepthTable(n or len(depths), t, depths)


def test_tuple_coloring_validation_and_lookup():
    C = TupleColoring(4, 2, 3, [0, 1, 2, 0, 1, 2])
    assert C.color((3, 2)) == 2
    assert [c for _, c in C.items()] == [0, 1, 2, 0, 1, 2]
    assert [r.tolist() for r in C.classes()] == [[0, 3], [1, 4], [2, 5]]
    with pytest.raises(InputError):
        TupleColoring(4, 2, 2, [0, 1, 2, 0, 1, 0])
    with pytest.raises(InputError):
        TupleColoring(4, 2, 2, [0, 1])
    with pytest.raises(InputError):
        VertexColoring(3, 2, [0, 2, 1])


def test_threshold_examples():
    C = depth_threshold_coloring(table([0, 2, 5]), 3, "3.7")
    assert C.colors.tolist() == [0, 1, 2]
    assert set(depth_threshold_coloring(table([0, 4, 90]), 1, 3.7).colors.tolist()) == {0}
    C = depth_threshold_coloring(table([0, 1, 107, 108, 5000]), 2, 108)
    assert C.colors.tolist() == [0, 1, 1, 1, 1]
    with pytest.raises(InputError):
        depth_threshold_coloring(table([0]), 2, 1)


def test_threshold_rule_partition_and_monotone():
    depths = np.arange(0, 400)
    for k in range(1, 6):
        for base in (Fraction(37, 10), Fraction(3, 2), 108):
            c = depth_threshold_coloring(table(depths), k, base).colors
            assert (np.diff(c) >= 0).all() and c.min() == 0 and c.max() <= k - 1
            for d, col in zip(depths, c):
                if d == 0:
                    assert col == 0
                elif col < k - 1:
                    assert Fraction(base) ** (col - 1) <= d < Fraction(base) ** col
                else:
                    assert d >= Fraction(base) ** (k - 2)


def test_constants():
    assert guaranteed_size(DISK_BASE, 2) == 14
    assert guaranteed_size(DISK_BASE, 3) == 51
    assert guaranteed_size(DISK_BASE, 1) == 4
    assert vc_base(2) == 108
    assert 91 < ball_base(3) < 92


def test_disks_pair_coloring_small():
    for seed in range(6):
        P = gen_random_general_position(40, 3000, seed)
        H = enumerate_ranges(P, "disks2d")
        for k in (1, 2, 3):
            rep = verify_polychromatic(H, disks_pair_coloring(P, k), guaranteed_size(DISK_BASE, k))
            assert rep.ok


def test_balls_tuple_coloring_rule():
    P = gen_random_general_position(9, 20, 3, dim=3)
    assert set(balls_tuple_coloring(P, 1).colors.tolist()) == {0}
    C = balls_tuple_coloring(P, 2)
    D = tuple_depth_table(enumerate_ranges(P, "balls"), 3)
    assert np.array_equal(C.colors, (D.depths > 0).astype(int))
    assert verify_polychromatic(enumerate_ranges(P, "balls"), C, guaranteed_size(ball_base(3), 2)).ok
    with pytest.raises(InputError):
        balls_tuple_coloring(gen_random_general_position(5, 30, 1), 2)


def _shrinkable_random(rng, n):
    # close a random family under a chain of one-smaller sub-edges
    h = random_hypergraph(rng, n, 6, 0.6)
    edges = set(h.masks)
    for e in list(edges):
        cur = e
        while cur:
            cur &= cur - 1
            edges.add(cur)
    return AbstractHypergraph(n, edges)


def test_vc_tuple_coloring():
    rng = random.Random(5)
    h = _shrinkable_random(rng, 12)
    from polytuple.hypergraph import vc_dimension

    d = vc_dimension(h)
    C = vc_tuple_coloring(h, d, 2)
    D = tuple_depth_table(h, d + 1)
    assert np.array_equal(C.colors, (D.depths > 0).astype(int))
    assert set(vc_tuple_coloring(h, d, 1).colors.tolist()) == {0}
    with pytest.raises(InputError):
        vc_tuple_coloring(AbstractHypergraph.from_edges(12, [[0, 1, 2]]), 2, 2)
    with pytest.raises(InputError):
        vc_tuple_coloring(h, 7, 2)


def test_combination_examples():
    vc = VertexColoring(2, 4, [1, 3])
    assert combination_coloring(vc, 2, 6).colors.tolist() == [4]
    assert combination_coloring(VertexColoring(2, 4, [2, 2]), 2, 6).colors.tolist() == [0]
    with pytest.raises(InputError):
        combination_coloring(VertexColoring(3, 3, [0, 1, 2]), 2, 4)


def test_combination_surjective_on_rainbow_edges():
    rng = random.Random(6)
    for t, k in [(2, 4), (2, 6), (3, 5), (1, 3)]:
        x = combination_vertex_colors(t, k)
        assert comb(x, t) >= k
        vc = VertexColoring(14, x, [rng.randrange(x) for _ in range(14)])
        C = combination_coloring(vc, t, k)
        for _ in range(100):
            pick = {}
            for v in rng.sample(range(14), 14):
                pick.setdefault(int(vc.assignment[v]), v)
            if len(pick) < x:
                continue
            edge = sorted(pick.values())
            seen = {C.color(T) for T in combinations(edge, t)}
            assert seen == set(range(k))


def test_combination_vertex_colors():
    assert combination_vertex_colors(2, 4) == 4
    assert combination_vertex_colors(2, 225) == 30
    assert combination_vertex_colors(2, 226) == 31
    assert combination_vertex_colors(1, 5) == 5


def test_parity_examples():
    vc = VertexColoring(3, 2, [1, 1, 0])
    assert parity_coloring(vc, 3).colors.tolist() == [0]
    assert parity_coloring(VertexColoring(3, 2, [0, 0, 0]), 2).colors.tolist() == [0, 0, 0]
    with pytest.raises(InputError):
        parity_coloring(VertexColoring(3, 3, [0, 1, 2]), 2)


def test_parity_property():
    rng = random.Random(7)
    for _ in range(200):
        n, t = 8, rng.randint(1, 4)
        vc = VertexColoring(n, 2, [rng.randrange(2) for _ in range(n)])
        C = parity_coloring(vc, t)
        e = rng.sample(range(n), rng.randint(t + 1, n))
        if len({int(vc.assignment[v]) for v in e}) < 2:
            continue
        assert {C.color(T) for T in combinations(sorted(e), t)} == {0, 1}


def test_lower_bound():
    assert lower_bound_f(1, 5).combinatorial == 5
    assert lower_bound_f(2, 6).combinatorial == 4
    assert lower_bound_f(2, 7).combinatorial == 5
    lb = lower_bound_f(2, 4)
    assert abs(float(lb.analytic) - 2 * 2 / 2.718281828459045) < 1e-12
    assert lb.analytic <= Fraction(4, 1) / Fraction(271828182845, 100000000000)


def test_cyclic_vertex_coloring():
    vc = cyclic_vertex_coloring([2, 0, 1, 3], 2)
    assert vc.assignment.tolist() == [1, 0, 0, 1]


def test_lll_thresholds():
    assert lll_threshold(126, 2, 2) == 14
    assert lll_threshold(126, 3, 2) == 21
    assert lll_threshold(8, 2, 1) == 12
    assert LLLParams(k=2, seed=0).m == 14
    with pytest.raises(InputError):
        LLLParams(k=2, seed=0, c=100)
    with pytest.raises(InputError):
        LLLParams(k=1, seed=0)


def test_lll_single_event_grid():
    G = gen_grid(4, 4)
    res = lll_grid_pair_coloring(G, LLLParams(k=2, seed=3))
    assert res.events == 1
    assert len(set(res.coloring.colors.tolist())) == 2


def test_lll_deterministic_and_valid():
    G = gen_grid(8, 8)
    p = LLLParams(k=2, seed=11, m=6)
    a, b = lll_grid_pair_coloring(G, p), lll_grid_pair_coloring(G, p)
    assert a.coloring == b.coloring and [r.as_dict() for r in a.log] == [r.as_dict() for r in b.log]
    assert verify_polychromatic(ranges_at_least(G, "rects2d", 6), a.coloring, 6).ok


def test_lll_resamples_and_logs():
    G = gen_grid(6, 6)
    res = lll_grid_pair_coloring(G, LLLParams(k=3, seed=1, m=3))
    assert res.log, "small m should force resampling"
    assert [r.round for r in res.log] == list(range(1, len(res.log) + 1))
    assert verify_polychromatic(ranges_at_least(G, "rects2d", 3), res.coloring, 3).ok


def test_lll_nontermination():
    G = gen_grid(6, 6)
    with pytest.raises(NonTerminationError):
        lll_grid_pair_coloring(G, LLLParams(k=3, seed=1, m=3, max_rounds=0))


def test_lll_other_shapes():
    G = gen_grid(6, 6, 6)
    res = lll_tuple_coloring(G, LLLParams(k=2, seed=2, t=2, shape="boxes"))
    assert verify_polychromatic(ranges_at_least(G, "boxes", res.m), res.coloring, res.m).ok
    line = gen_grid(40)
    res = lll_tuple_coloring(line, LLLParams(k=2, seed=1, t=1, shape="boxes", c=8))
    assert res.m == 12
    assert verify_polychromatic(ranges_at_least(line, "boxes", 12), res.coloring, 12).ok
    G2 = gen_grid(4, 4)
    res = lll_tuple_coloring(G2, LLLParams(k=2, seed=4, t=2, shape="balls", c=126, m=4))
    assert verify_polychromatic(ranges_at_least(G2, "balls", 4), res.coloring, 4).ok


def test_lll_grid_requires_full_grid():
    with pytest.raises(InputError):
        lll_grid_pair_coloring(PointSet([(0, 0), (1, 0), (0, 1)]), LLLParams(k=2, seed=1))

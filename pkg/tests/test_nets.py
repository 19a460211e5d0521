from math import comb

import pytest

from polytuple.colorings import TupleColoring, cyclic_vertex_coloring
from polytuple.errors import CertificationError, InputError
from polytuple.geometry import PointSet, enumerate_ranges
from polytuple.hypergraph import AbstractHypergraph
from polytuple.nets import combination_net_colorer, decompose_into_nets, is_eps_t_net


def intervals(n):
    return enumerate_ranges(PointSet([(v,) for v in range(n)]), "intervals1d")


def cyclic(n, t):
    return combination_net_colorer(lambda x: cyclic_vertex_coloring(range(n), x), lambda x: x, t)


def test_is_net_examples():
    h = AbstractHypergraph.from_edges(6, [[0, 1, 2, 3], [4, 5]])
    from itertools import combinations

    assert is_eps_t_net(h, 0.5, list(combinations(range(6), 2))) == (True, None)
    assert is_eps_t_net(h, 0.5, []) == (False, (0, 1, 2, 3))
    assert is_eps_t_net(h, 0.5, [(4, 5)]) == (False, (0, 1, 2, 3))
    with pytest.raises(InputError):
        is_eps_t_net(h, 1.5, [])


def test_decompose_small():
    D = decompose_into_nets(intervals(10), 1, 0.5, *cyclic(10, 1))
    assert D.k == 5
    classes = D.classes()
    assert sorted(v for c in classes for (v,) in c) == list(range(10))


def test_decompose_pairs_and_ceiling():
    n, eps = 60, 0.25
    D = decompose_into_nets(intervals(n), 2, eps, *cyclic(n, 2))
    size = 15
    assert D.k == max(k for k in range(1, 500) if -(-2 * k**0.5 // 1) <= size)
    assert D.k <= comb(size, 2)
    assert D.k >= ((eps * n) / 2) ** 2 // 1 - 2 * size
    assert sum(len(c) for c in D.classes()) == comb(n, 2)


def test_decompose_errors():
    with pytest.raises(InputError):
        decompose_into_nets(intervals(10), 2, 0.2, *cyclic(10, 2))

    def bad_colorer(k):
        return TupleColoring.constant(10, 1, k)

    with pytest.raises(CertificationError):
        decompose_into_nets(intervals(10), 1, 0.5, bad_colorer, lambda k: k)

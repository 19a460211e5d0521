"""Splitting all t-tuples into disjoint eps-t-nets.

A set of tuples is an eps-t-net when every edge with at least ``eps * n``
vertices contains one of them. Every color class of a coloring whose
threshold is at most ``eps * n`` is such a net, so the decomposition looks for
the most colors whose threshold still fits, then certifies every class.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, comb
from typing import Callable, Iterable, Sequence

import numpy as np

from .colorings.base import TupleColoring, VertexColoring
from .colorings.combination import combination_coloring, combination_vertex_colors
from .combinatorics import all_tuples, members
from .errors import CertificationError, InputError
from .hypergraph import AbstractHypergraph


def _as_eps(eps) -> Fraction:
    e = Fraction(str(eps)) if isinstance(eps, float) else Fraction(eps)
    if not 0 < e < 1:
        raise InputError(f"eps must lie in (0, 1), got {eps}")
    return e


def min_net_edge_size(n: int, eps) -> int:
    """Smallest edge size an eps-net must hit: ``ceil(eps * n)``."""
    return ceil(_as_eps(eps) * n)


def is_eps_t_net(
    H: AbstractHypergraph, eps, tuples: Iterable[Sequence[int]]
) -> tuple[bool, tuple[int, ...] | None]:
    """Whether every edge with at least ``eps * n`` vertices contains a listed tuple.

    Returns ``(True, None)`` or ``(False, first_edge_missed)``.
    """
    lo = min_net_edge_size(H.n, eps)
    T = np.array([sorted(tp) for tp in tuples], dtype=np.int64)
    big = [i for i, s in enumerate(H.sizes) if s >= lo]
    if not big:
        return True, None
    if T.size == 0:
        return False, min(tuple(members(H.masks[i])) for i in big)
    E = H.incidence[big]
    hit = E[:, T[:, 0]]
    for j in range(1, T.shape[1]):
        hit = hit & E[:, T[:, j]]
    missed = np.flatnonzero(~hit.any(axis=1))
    if missed.size:
        return False, min(tuple(members(H.masks[big[i]])) for i in missed)
    return True, None


@dataclass
class NetDecomposition:
    eps: Fraction
    t: int
    k: int
    coloring: TupleColoring

    @property
    def assignment(self) -> np.ndarray:
        """Class index of every tuple, in lexicographic tuple order."""
        return self.coloring.colors

    def classes(self) -> list[list[tuple[int, ...]]]:
        out: list[list[tuple[int, ...]]] = [[] for _ in range(self.k)]
        for tup, c in self.coloring.items():
            out[c].append(tup)
        return out


def decompose_into_nets(
    H: AbstractHypergraph,
    t: int,
    eps,
    colorer: Callable[[int], TupleColoring],
    threshold: Callable[[int], int],
) -> NetDecomposition:
    """Largest ``k`` with ``threshold(k) <= eps * n``, its coloring, every class certified.

    ``threshold`` must be nondecreasing in ``k``; ``colorer(k)`` must return a
    ``t``-tuple ``k``-coloring whose classes it claims are nets.
    """
    e = _as_eps(eps)
    limit = e * H.n
    if limit < t + 1:
        raise InputError(f"eps*n = {float(limit):g} < t+1 = {t + 1}; no useful net exists")
    if threshold(1) > limit:
        raise InputError(f"threshold(1) = {threshold(1)} exceeds eps*n = {float(limit):g}")
    cap = comb(H.n, t)
    lo = 1
    while lo < cap and threshold(min(2 * lo, cap)) <= limit:
        lo = min(2 * lo, cap)
    # invariant: threshold(lo) fits, threshold(hi) does not (or hi is past the tuple count)
    hi = min(2 * lo, cap) if lo < cap else cap + 1
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if threshold(mid) <= limit:
            lo = mid
        else:
            hi = mid
    coloring = colorer(lo)
    if coloring.k != lo or coloring.t != t or coloring.n != H.n:
        raise InputError("colorer returned a coloring of the wrong shape")
    ranker_t = list(all_tuples(H.n, t))
    for c, ranks in enumerate(coloring.classes()):
        ok, witness = is_eps_t_net(H, e, [ranker_t[r] for r in ranks])
        if not ok:
            raise CertificationError(f"class {c} misses edge {witness}", witness)
    return NetDecomposition(e, t, lo, coloring)


def combination_net_colorer(
    vertex_colorer: Callable[[int], VertexColoring],
    vertex_threshold: Callable[[int], int],
    t: int,
) -> tuple[Callable[[int], TupleColoring], Callable[[int], int]]:
    """Colorer/threshold pair built from a vertex colorer with ``x`` colors.

    ``k`` tuple colors use ``x = ceil(t * k^(1/t))`` vertex colors, and the
    threshold is the vertex threshold at ``x``.
    """

    def colorer(k: int) -> TupleColoring:
        return combination_coloring(vertex_colorer(combination_vertex_colors(t, k)), t, k)

    def threshold(k: int) -> int:
        return vertex_threshold(combination_vertex_colors(t, k))

    return colorer, threshold


__all__ = [
    "NetDecomposition",
    "combination_net_colorer",
    "decompose_into_nets",
    "is_eps_t_net",
    "min_net_edge_size",
]

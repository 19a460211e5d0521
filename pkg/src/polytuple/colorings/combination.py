"""Tuple colorings derived from a vertex coloring."""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Sequence

import numpy as np

from ..combinatorics import Ranker
from ..errors import InputError
from .base import TupleColoring, VertexColoring


def _tuple_matrix(n: int, t: int) -> np.ndarray:
    if t == 1:
        return np.arange(n, dtype=np.int64)[:, None]
    if t == 2:
        i, j = np.triu_indices(n, 1)
        return np.column_stack([i, j]).astype(np.int64)
    return np.array(list(combinations(range(n), t)), dtype=np.int64).reshape(-1, t)


def combination_coloring(vc: VertexColoring, t: int, k: int) -> TupleColoring:
    """Color a tuple by the rank of its set of vertex colors, modulo ``k``.

    Tuples whose vertices repeat a color get color 0.
    """
    if t < 1 or k < 1:
        raise InputError("t and k must be positive")
    if vc.x < t or comb(vc.x, t) < k:
        raise InputError(f"C({vc.x},{t}) = {comb(vc.x, t)} < k = {k}")
    T = _tuple_matrix(vc.n, t)
    cols = np.sort(vc.assignment[T], axis=1)
    distinct = np.all(np.diff(cols, axis=1) > 0, axis=1) if t > 1 else np.ones(len(T), dtype=bool)
    out = np.zeros(len(T), dtype=np.int64)
    if distinct.any():
        out[distinct] = Ranker(vc.x, t).rank(cols[distinct]) % k
    return TupleColoring(vc.n, t, k, out)


def parity_coloring(vc: VertexColoring, t: int) -> TupleColoring:
    """Color a tuple by the parity of its members colored 1."""
    if vc.x != 2:
        raise InputError(f"parity coloring needs a 2-coloring of the vertices, got x={vc.x}")
    T = _tuple_matrix(vc.n, t)
    return TupleColoring(vc.n, t, 2, vc.assignment[T].sum(axis=1) % 2)


def cyclic_vertex_coloring(order: Sequence[int], x: int) -> VertexColoring:
    """Vertex ``order[i]`` gets color ``i mod x``."""
    if x < 1:
        raise InputError("x must be positive")
    out = np.zeros(len(order), dtype=np.int64)
    out[np.asarray(order, dtype=np.int64)] = np.arange(len(order)) % x
    return VertexColoring(len(order), x, out)


def combination_vertex_colors(t: int, k: int) -> int:
    """Smallest ``x`` with ``x >= t * k^(1/t)``, computed in integers."""
    target = t**t * k
    x = max(t, 1)
    while x**t < target:
        x += 1
    return x


@dataclass(frozen=True)
class LowerBound:
    analytic: Fraction
    combinatorial: int


def lower_bound_f(t: int, k: int, digits: int = 40) -> LowerBound:
    """Lower bounds on the threshold for any ``t``-tuple ``k``-coloring.

    ``analytic`` is ``t * k^(1/t) / e`` rounded down to ``digits`` places;
    ``combinatorial`` is the least ``f`` with ``C(f, t) >= k``.
    """
    if t < 1 or k < 1:
        raise InputError("t and k must be positive")
    with localcontext() as ctx:
        ctx.prec = digits + 10
        val = Decimal(t) * (Decimal(k).ln() / t).exp() / Decimal(1).exp()
        ctx.rounding = "ROUND_FLOOR"
        val = val.quantize(Decimal(1).scaleb(-digits))
    f = t
    while comb(f, t) < k:
        f += 1
    return LowerBound(Fraction(val), f)

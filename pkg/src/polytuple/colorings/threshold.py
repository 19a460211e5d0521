"""Colorings that bucket tuples by depth on a geometric scale.

A tuple of depth 0 gets color 0; otherwise its color is one more than the
number of scale steps ``base^1, base^2, ...`` its depth reaches, capped at
``k - 1``.
"""

from __future__ import annotations

from decimal import Decimal
from fractions import Fraction
from math import ceil

import numpy as np

from ..errors import InputError
from ..geometry.depth import pair_depth_table_disks
from ..geometry.points import PointSet
from ..geometry.ranges import RangeKind, enumerate_ranges
from ..hypergraph import AbstractHypergraph, DepthTable, is_shrinkable, tuple_depth_table, vc_dimension
from .base import TupleColoring

DISK_BASE = Fraction(37, 10)
# e to 40 places; the ball base only needs to be a fixed exact rational
_E = Fraction(Decimal("2.7182818284590452353602874713526624977572"))


def as_base(base) -> Fraction:
    if isinstance(base, float):
        base = str(base)
    b = Fraction(base)
    if b <= 1:
        raise InputError(f"base must exceed 1, got {base}")
    return b


def scale_thresholds(k: int, base) -> np.ndarray:
    """Smallest integer depths for colors ``1..k-1``: ``ceil(base^i)`` for ``i = 0..k-2``."""
    b = as_base(base)
    return np.array([ceil(b**i) for i in range(k - 1)], dtype=np.int64)


def depth_threshold_coloring(D: DepthTable, k: int, base) -> TupleColoring:
    if k < 1:
        raise InputError(f"k must be positive, got {k}")
    cuts = scale_thresholds(k, base)
    colors = np.searchsorted(cuts, D.depths, side="right")
    return TupleColoring(D.n, D.t, k, colors)


def guaranteed_size(base, k: int, exponent_offset: int = 0) -> int:
    """``ceil(base^(k + exponent_offset))``: the edge size from which a colorer's guarantee applies."""
    return ceil(as_base(base) ** (k + exponent_offset))


def disks_pair_coloring(P: PointSet, k: int) -> TupleColoring:
    """Pairs colored by disk depth with base 3.7; disk ranges with at least
    ``ceil(3.7^k)`` points see every color."""
    if P.dim != 2:
        raise InputError("disk coloring needs planar points")
    if not P.general_position:
        raise InputError("disk coloring needs a point set in general position")
    return depth_threshold_coloring(pair_depth_table_disks(P), k, DISK_BASE)


def ball_base(d: int) -> Fraction:
    return 5 * _E * d**3 / 4


def ball_tuple_size(d: int) -> int:
    return (d + 3) // 2


def balls_tuple_coloring(P: PointSet, k: int) -> TupleColoring:
    d = P.dim
    if d < 3:
        raise InputError("ball tuple coloring is defined for dimension >= 3")
    H = enumerate_ranges(P, RangeKind.BALLS)
    return depth_threshold_coloring(tuple_depth_table(H, ball_tuple_size(d)), k, ball_base(d))


def vc_base(d: int) -> int:
    return 4 * (d + 1) ** (d + 1)


def vc_tuple_coloring(H: AbstractHypergraph, d: int, k: int, check: bool = True) -> TupleColoring:
    """(d+1)-tuples colored by depth with base ``4(d+1)^(d+1)``; edges with at
    least ``base^(k-1)`` vertices see every color when the preconditions hold."""
    if d < 0:
        raise InputError("d must be nonnegative")
    if H.n < 2 * d + 2:
        raise InputError(f"need n >= 2d+2 = {2 * d + 2}, got n={H.n}")
    if check:
        ok, witness = is_shrinkable(H)
        if not ok:
            raise InputError(f"hypergraph is not shrinkable: edge {witness[0]} has no sub-edge of size {witness[1]}")
        vc = vc_dimension(H, cap=d + 1)
        if vc > d:
            raise InputError(f"VC-dimension is at least {vc} > {d}")
    return depth_threshold_coloring(tuple_depth_table(H, d + 1), k, vc_base(d))

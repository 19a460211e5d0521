"""Exact depth of point pairs with respect to closed disks.

Circles through ``x`` and ``y`` form a one-parameter family: the centre moves
along the perpendicular bisector. A third point ``p`` lies in the closed disk
iff ``A <= s * B`` with ``A = (p-x)·(p-y)`` and ``B = cross(y-x, p-x)``, where
``s`` is twice the signed centre offset. So each point is inside on a
half-line of ``s`` (or for every ``s`` / no ``s`` when collinear with ``x, y``),
and the depth is the smallest coverage over the open gaps between the
critical values ``A / B``.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

import numpy as np

from ..errors import InputError
from ..hypergraph import DepthTable
from ..parallel import pmap
from .points import PointSet


def pair_depth_disks(P: PointSet, x: int, y: int) -> int:
    """Fewest other points in any closed disk containing points ``x`` and ``y``."""
    if P.dim != 2:
        raise InputError("pair depth for disks needs planar points")
    n = len(P)
    for v in (x, y):
        if not 0 <= v < n:
            raise InputError(f"point index {v} outside [0, {n})")
    if x == y:
        raise InputError("pair depth needs two distinct points")
    return _sweep(P.coords, x, y)


def _sweep(C, x: int, y: int) -> int:
    (x0, x1), (y0, y1) = C[x], C[y]
    dx, dy = y0 - x0, y1 - x1
    always = 0
    below = 0
    events: dict[Fraction, list[int]] = {}
    for i, (p0, p1) in enumerate(C):
        if i == x or i == y:
            continue
        a = (p0 - x0) * (p0 - y0) + (p1 - x1) * (p1 - y1)
        b = dx * (p1 - x1) - dy * (p0 - x0)
        if b == 0:
            # collinear with x, y: inside every such disk iff on the segment
            if a <= 0:
                always += 1
            continue
        ev = events.setdefault(Fraction(a, b), [0, 0])
        if b > 0:
            ev[0] += 1
        else:
            ev[1] += 1
            below += 1
    cur = always + below
    best = cur
    for key in sorted(events):
        enter, leave = events[key]
        cur += enter - leave
        if cur < best:
            best = cur
    return best


def _row(args) -> list[int]:
    C, x = args
    return [_sweep(C, x, y) for y in range(x + 1, len(C))]


def pair_depth_table_disks(P: PointSet, workers: int | None = None) -> DepthTable:
    """Disk depth of every pair, in pair-rank order."""
    if P.dim != 2:
        raise InputError("pair depth for disks needs planar points")
    n = len(P)
    if n < 2:
        raise InputError("need at least two points")
    rows = pmap(_row, [(P.coords, x) for x in range(n - 1)], workers)
    depths = np.fromiter((d for r in rows for d in r), dtype=np.int64, count=n * (n - 1) // 2)
    return DepthTable(n, 2, depths)


def moment_curve_sharpness_check(n: int, d: int, sizes=None) -> bool:
    """Every subset of the moment-curve points ``(i, i^2, ..., i^d)`` with fewer
    than ``floor((d+3)/2)`` points is cut out exactly by a ball (ball-depth 0)."""
    from ..generators import gen_moment_curve
    from .ranges import RangeKind, enumerate_ranges

    P = gen_moment_curve(n, d)
    H = enumerate_ranges(P, RangeKind.BALLS, allow_degenerate=True, ball_subset_budget=10**7)
    limit = (d + 3) // 2
    sizes = range(1, limit) if sizes is None else [s for s in sizes if s < limit]
    for s in sizes:
        for S in combinations(range(n), s):
            if sum(1 << i for i in S) not in H:
                return False
    return True

"""Exact integer predicates.

Every decision is an integer determinant sign. Arrays use ``int64`` when the
coordinate span keeps all intermediate products below 2**63, and fall back
to ``object`` arrays of Python ints otherwise.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence

import numpy as np

# 12 * SPAN**4 must stay below 2**63 for incircle; 25_000 leaves headroom.
INT64_SAFE_SPAN = 25_000


def exact_array(coords: Sequence[Sequence[int]]) -> np.ndarray:
    arr = np.array(coords, dtype=object)
    if arr.size == 0:
        return np.zeros((0, 0), dtype=np.int64)
    lo, hi = min(int(v) for v in arr.flat), max(int(v) for v in arr.flat)
    if hi - lo <= INT64_SAFE_SPAN and -(2**40) < lo and hi < 2**40:
        return np.array(coords, dtype=np.int64)
    return arr


def orient2d(a, b, c):
    """Twice the signed area of ``abc``; positive when counter-clockwise.

    Broadcasts over leading axes; the last axis holds ``(x, y)``.
    """
    return (b[..., 0] - a[..., 0]) * (c[..., 1] - a[..., 1]) - (b[..., 1] - a[..., 1]) * (c[..., 0] - a[..., 0])


def incircle(a, b, c, d):
    """Positive when ``d`` is strictly inside the circle through ``a, b, c``
    taken counter-clockwise; zero when cocircular."""
    adx = a[..., 0] - d[..., 0]
    ady = a[..., 1] - d[..., 1]
    bdx = b[..., 0] - d[..., 0]
    bdy = b[..., 1] - d[..., 1]
    cdx = c[..., 0] - d[..., 0]
    cdy = c[..., 1] - d[..., 1]
    alift = adx * adx + ady * ady
    blift = bdx * bdx + bdy * bdy
    clift = cdx * cdx + cdy * cdy
    return alift * (bdx * cdy - cdx * bdy) + blift * (cdx * ady - adx * cdy) + clift * (adx * bdy - bdx * ady)


def sign(x) -> np.ndarray:
    if isinstance(x, np.ndarray) and x.dtype == object:
        return np.array([(v > 0) - (v < 0) for v in x.flat], dtype=np.int8).reshape(x.shape)
    return np.sign(x).astype(np.int8)


def det_int(rows: Sequence[Sequence[int]]) -> int:
    """Exact determinant of a square integer matrix (Bareiss elimination)."""
    m = [list(map(int, r)) for r in rows]
    n = len(m)
    if n == 0:
        return 1
    sgn = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sgn = -sgn
                    break
            else:
                return 0
        piv = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * piv - m[i][k] * m[k][j]) // prev
        prev = piv
    return sgn * m[n - 1][n - 1]


def affine_rank(points: Sequence[Sequence[int]]) -> int:
    """Dimension of the affine hull (-1 for the empty set)."""
    if not points:
        return -1
    p0 = points[0]
    vecs = [[Fraction(int(a) - int(b)) for a, b in zip(p, p0)] for p in points[1:]]
    return _rank(vecs)


def _rank(rows: list[list[Fraction]]) -> int:
    rows = [r[:] for r in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][col] != 0:
                f = rows[i][col] / rows[rank][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def solve_fraction(G: list[list[Fraction]], b: list[Fraction]) -> list[Fraction] | None:
    """Gauss-Jordan solve; ``None`` if ``G`` is singular."""
    n = len(G)
    M = [list(G[i]) + [b[i]] for i in range(n)]
    for col in range(n):
        piv = next((i for i in range(col, n) if M[i][col] != 0), None)
        if piv is None:
            return None
        M[col], M[piv] = M[piv], M[col]
        p = M[col][col]
        M[col] = [v / p for v in M[col]]
        for i in range(n):
            if i != col and M[i][col] != 0:
                f = M[i][col]
                M[i] = [a - f * c for a, c in zip(M[i], M[col])]
    return [M[i][n] for i in range(n)]


def sphere_through(points: Sequence[Sequence[int]]) -> tuple[list[int], int] | None:
    """Centre of the smallest sphere through ``points`` (centre in their affine hull).

    Returns ``(C, den)`` with the centre equal to ``C / den`` and ``den > 0``, or
    ``None`` when the points are affinely dependent.
    """
    p0 = [int(v) for v in points[0]]
    vs = [[int(a) - b for a, b in zip(p, p0)] for p in points[1:]]
    if not vs:
        return p0, 1
    G = [[Fraction(sum(a * b for a, b in zip(u, w))) for w in vs] for u in vs]
    rhs = [Fraction(sum(a * a for a in u), 2) for u in vs]
    lam = solve_fraction(G, rhs)
    if lam is None:
        return None
    centre = [Fraction(c) for c in p0]
    for l, u in zip(lam, vs):
        for i, a in enumerate(u):
            centre[i] += l * a
    den = lcm(*(c.denominator for c in centre))
    return [int(c * den) for c in centre], den


def sphere_side(coords: Sequence[Sequence[int]], C: Sequence[int], den: int, p0: Sequence[int]) -> list[int]:
    """Sign per point: +1 strictly inside, 0 on, -1 outside the sphere centred at
    ``C/den`` passing through ``p0``."""
    q0 = sum(int(a) * int(a) for a in p0)
    out = []
    for p in coords:
        val = 2 * sum((int(a) - int(b)) * c for a, b, c in zip(p, p0, C)) - den * (sum(int(a) * int(a) for a in p) - q0)
        out.append((val > 0) - (val < 0))
    return out

"""Canonical enumeration of geometric range spaces, plus range shrinking.

Every enumerator returns the exact family ``{object ∩ P}`` as an
:class:`~polytuple.hypergraph.AbstractHypergraph`, closed containment
throughout. Disks and balls are enumerated through their defining spheres:
the points strictly inside are always kept, and the boundary points are
split by every open halfspace (the sign patterns a small perturbation of
the sphere can realise). In general position the boundary points are
affinely independent, so every boundary subset is realisable.
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from itertools import combinations, product
from math import comb, lcm
from typing import Iterator, Sequence

import numpy as np

from ..combinatorics import members, packed_rows_to_masks, to_mask
from ..errors import InputError, ResourceError, ShrinkabilityViolation
from ..hypergraph import AbstractHypergraph
from .points import PointSet
from .predicates import (
    affine_rank,
    det_int,
    incircle,
    orient2d,
    solve_fraction,
    sphere_side,
    sphere_through,
)

DEFAULT_RANGE_BUDGET = 6_000_000
DEFAULT_BALL_SUBSET_BUDGET = 12_000


class RangeKind(str, Enum):
    DISKS2D = "disks2d"
    BALLS = "balls"
    HALFPLANES2D = "halfplanes2d"
    RECTS2D = "rects2d"
    BOXES = "boxes"
    SQUARES2D = "squares2d"
    INTERVALS1D = "intervals1d"

    @classmethod
    def parse(cls, name: "str | RangeKind") -> "RangeKind":
        if isinstance(name, RangeKind):
            return name
        aliases = {
            "axis_rectangles2d": "rects2d",
            "axis_boxes": "boxes",
            "axis_squares2d": "squares2d",
        }
        key = aliases.get(name, name)
        try:
            return cls(key)
        except ValueError:
            raise InputError(f"unknown range kind {name!r}") from None

    def check_dim(self, dim: int) -> None:
        need = {
            RangeKind.DISKS2D: 2,
            RangeKind.HALFPLANES2D: 2,
            RangeKind.RECTS2D: 2,
            RangeKind.SQUARES2D: 2,
            RangeKind.INTERVALS1D: 1,
        }.get(self)
        if need is not None and dim != need:
            raise InputError(f"{self.value} needs dimension {need}, point set has {dim}")


class _Collector:
    """Accumulates candidate ranges as packed rows, deduplicating at the end."""

    def __init__(self, n: int, budget: int, gen_width: int):
        self.n = n
        self.width = max(1, (n + 7) // 8)
        self.budget = budget
        self.gen_width = gen_width
        self.count = 0
        self._packed: list[np.ndarray] = []
        self._gens: list[np.ndarray] = []

    def _charge(self, r: int) -> None:
        self.count += r
        if self.count > self.budget:
            raise ResourceError(f"range enumeration exceeded budget of {self.budget} candidates")

    def add_rows(self, rows: np.ndarray, gens: np.ndarray) -> None:
        if rows.shape[0] == 0:
            return
        self._charge(rows.shape[0])
        self._packed.append(np.packbits(rows, axis=1, bitorder="little"))
        self._gens.append(np.asarray(gens, dtype=np.int64).reshape(rows.shape[0], self.gen_width))

    def add_masks(self, masks: Sequence[int], gens: Sequence[Sequence[int]]) -> None:
        if not masks:
            return
        self._charge(len(masks))
        buf = b"".join(m.to_bytes(self.width, "little") for m in masks)
        self._packed.append(np.frombuffer(buf, dtype=np.uint8).reshape(len(masks), self.width))
        g = np.full((len(masks), self.gen_width), -1, dtype=np.int64)
        for r, gg in enumerate(gens):
            g[r, : len(gg)] = gg
        self._gens.append(g)

    def result(self, with_generators: bool) -> AbstractHypergraph:
        if not self._packed:
            return AbstractHypergraph(self.n, [])
        packed = np.ascontiguousarray(np.concatenate(self._packed))
        gens = np.concatenate(self._gens)
        keys = packed.view(np.dtype((np.void, self.width))).ravel()
        _, first = np.unique(keys, return_index=True)
        masks = packed_rows_to_masks(packed[first])
        generators = None
        if with_generators:
            generators = {m: tuple(int(v) for v in gens[i] if v >= 0) for m, i in zip(masks, first)}
        return AbstractHypergraph(self.n, masks, generators)


def enumerate_ranges(
    P: PointSet,
    kind: "RangeKind | str",
    *,
    with_generators: bool = False,
    allow_degenerate: bool = False,
    budget: int = DEFAULT_RANGE_BUDGET,
    ball_subset_budget: int = DEFAULT_BALL_SUBSET_BUDGET,
) -> AbstractHypergraph:
    """All distinct ranges ``{object ∩ P}`` for the given family.

    Disks and balls require a general-position point set unless
    ``allow_degenerate`` is set; the degenerate path is exact but slower.
    """
    kind = RangeKind.parse(kind)
    kind.check_dim(P.dim)
    n = len(P)
    if kind in (RangeKind.DISKS2D, RangeKind.BALLS) and not allow_degenerate and not P.general_position:
        raise InputError(f"{kind.value} enumeration needs a point set in general position")
    if kind is RangeKind.DISKS2D or (kind is RangeKind.BALLS and P.dim == 2):
        col = _Collector(n, budget, 3)
        _disk_ranges(P, col)
    elif kind is RangeKind.BALLS:
        col = _Collector(n, budget, P.dim + 1)
        _sphere_ranges(P, col, ball_subset_budget)
    elif kind is RangeKind.HALFPLANES2D:
        col = _Collector(n, budget, 2)
        _halfplane_ranges(P, col)
    elif kind in (RangeKind.RECTS2D, RangeKind.BOXES):
        col = _Collector(n, budget, 2 * P.dim)
        total = 1
        for axis in range(P.dim):
            u = len({p[axis] for p in P.coords})
            total *= u * (u + 1) // 2
        if total > budget:
            raise ResourceError(f"{total} boxes exceed budget {budget}")
        masks = [0] + [mask for _, mask in box_ranges_ordered(P)]
        gens = [_extreme_points(P, m) if with_generators else () for m in masks]
        col.add_masks(masks, gens)
    elif kind is RangeKind.SQUARES2D:
        col = _Collector(n, budget, 2)
        _square_ranges(P, col)
    else:
        col = _Collector(n, budget, 2)
        _interval_ranges(P, col)
    return col.result(with_generators)


# -- disks and balls ---------------------------------------------------------


def _emit_variants(col: _Collector, inside: np.ndarray, bidx: np.ndarray, gens: np.ndarray) -> None:
    r, b = bidx.shape
    ar = np.arange(r)
    for pat in range(1 << b):
        rows = inside.copy()
        for q in range(b):
            if pat >> q & 1:
                rows[ar, bidx[:, q]] = True
        col.add_rows(rows, gens)


def _disk_ranges(P: PointSet, col: _Collector) -> None:
    n = len(P)
    A = P.array
    degenerate: dict[tuple[int, int], tuple[int, ...]] = {}
    if n >= 3:
        triples = np.array(list(combinations(range(n), 3)), dtype=np.int64)
        chunk = max(1, 400_000 // max(n, 1))
        for s in range(0, len(triples), chunk):
            T = triples[s : s + chunk]
            a, b, c = A[T[:, 0]], A[T[:, 1]], A[T[:, 2]]
            o = orient2d(a, b, c)
            ok = np.asarray(o != 0, dtype=bool)
            if not ok.any():
                continue
            T = T[ok]
            a, b, c, o = a[ok], b[ok], c[ok], o[ok]
            ic = incircle(a[:, None, :], b[:, None, :], c[:, None, :], A[None, :, :])
            side = _signs(ic) * _signs(o)[:, None]
            inside = side > 0
            bnd = side == 0
            nb = bnd.sum(axis=1)
            simple = nb == 3
            if simple.any():
                _emit_variants(col, inside[simple], T[simple], T[simple])
            for r in np.flatnonzero(~simple):
                key = (_row_mask(inside[r]), _row_mask(bnd[r]))
                degenerate.setdefault(key, tuple(int(v) for v in T[r]))
    if n >= 2:
        pairs = np.array(list(combinations(range(n), 2)), dtype=np.int64)
        chunk = max(1, 400_000 // max(n, 1))
        for s in range(0, len(pairs), chunk):
            Q = pairs[s : s + chunk]
            a, b = A[Q[:, 0]][:, None, :], A[Q[:, 1]][:, None, :]
            # Thales: p lies in the closed diametral disk of ab iff (p-a)·(p-b) <= 0
            val = ((A[None, :, :] - a) * (A[None, :, :] - b)).sum(axis=2)
            sg = _signs(val)
            inside = sg < 0
            bnd = sg == 0
            nb = bnd.sum(axis=1)
            simple = nb == 2
            g = np.column_stack([Q, np.full(len(Q), -1)])
            if simple.any():
                _emit_variants(col, inside[simple], Q[simple], g[simple])
            for r in np.flatnonzero(~simple):
                key = (_row_mask(inside[r]), _row_mask(bnd[r]))
                degenerate.setdefault(key, (int(Q[r, 0]), int(Q[r, 1])))
    _emit_degenerate(P, col, degenerate)
    col.add_masks([0] + [1 << i for i in range(n)], [()] + [(i,) for i in range(n)])


def _sphere_ranges(P: PointSet, col: _Collector, subset_budget: int) -> None:
    n, d = len(P), P.dim
    C = P.coords
    total = sum(comb(n, j) for j in range(2, min(d + 1, n) + 1))
    if total > subset_budget:
        raise ResourceError(f"{total} candidate spheres exceed budget {subset_budget} (n={n}, d={d})")
    spheres: dict[tuple[int, int], tuple[int, ...]] = {}
    for j in range(2, min(d + 1, n) + 1):
        for S in combinations(range(n), j):
            sp = sphere_through([C[i] for i in S])
            if sp is None:
                continue
            centre, den = sp
            sides = sphere_side(C, centre, den, C[S[0]])
            inside = to_mask(i for i, v in enumerate(sides) if v > 0)
            bnd = to_mask(i for i, v in enumerate(sides) if v == 0)
            spheres.setdefault((inside, bnd), S)
    _emit_degenerate(P, col, spheres)
    col.add_masks([0] + [1 << i for i in range(n)], [()] + [(i,) for i in range(n)])


def _emit_degenerate(P: PointSet, col: _Collector, spheres: dict) -> None:
    cache: dict[tuple[int, ...], set[int]] = {}
    for (inside, bnd), gen in spheres.items():
        Z = members(bnd)
        key = tuple(Z)
        if key not in cache:
            cache[key] = boundary_splits([P.coords[i] for i in Z])
        masks = []
        for local in cache[key]:
            m = inside
            for q, v in enumerate(Z):
                if local >> q & 1:
                    m |= 1 << v
            masks.append(m)
        col.add_masks(masks, [gen] * len(masks))


def boundary_splits(points: Sequence[Sequence[int]]) -> set[int]:
    """Subsets (local bitmasks) of ``points`` realisable as boundary-inclusion
    patterns of a perturbed sphere: exactly the open-halfspace splits."""
    k = len(points)
    if k == 0:
        return {0}
    if affine_rank(points) == k - 1:
        return set(range(1 << k))
    return halfspace_ranges(points)


def halfspace_ranges(points: Sequence[Sequence[int]]) -> set[int]:
    """All subsets of ``points`` cut off by an open halfspace, as local bitmasks.

    Exact in any position: a separating hyperplane can be rotated onto ``r``
    affinely independent points of the set (``r`` the affine dimension), and
    the points on it are split recursively inside that hyperplane.
    """
    pts = [tuple(int(v) for v in p) for p in points]
    memo: dict[tuple[int, ...], set[int]] = {}
    return _halfspace_rec(tuple(range(len(pts))), pts, memo)


def _halfspace_rec(idx: tuple[int, ...], pts, memo) -> set[int]:
    if idx in memo:
        return memo[idx]
    full = to_mask(idx)
    out = {0, full}
    if len(idx) >= 2:
        alpha, r = _affine_coords([pts[i] for i in idx])
        if r == len(idx) - 1:
            # affinely independent: every subset is separable
            out = set()
            for sub in range(1 << len(idx)):
                out.add(to_mask(idx[q] for q in range(len(idx)) if sub >> q & 1))
        else:
            for H in combinations(range(len(idx)), r):
                normal = _normal([alpha[h] for h in H], r)
                if not any(normal):
                    continue
                h0 = alpha[H[0]]
                plus = minus = 0
                zero = []
                for q, a in enumerate(alpha):
                    v = sum(c * (x - y) for c, x, y in zip(normal, a, h0))
                    if v > 0:
                        plus |= 1 << idx[q]
                    elif v < 0:
                        minus |= 1 << idx[q]
                    else:
                        zero.append(idx[q])
                for b in _halfspace_rec(tuple(zero), pts, memo):
                    out.add(plus | b)
                    out.add(minus | b)
    memo[idx] = out
    return out


def _affine_coords(pts: list[tuple[int, ...]]) -> tuple[list[list[int]], int]:
    """Integer coordinates of ``pts`` inside their own affine hull (up to a
    positive affine change of basis) and the hull dimension."""
    p0 = pts[0]
    basis: list[list[int]] = []
    for p in pts[1:]:
        w = [a - b for a, b in zip(p, p0)]
        if affine_rank([p0] + [tuple(a + c for a, c in zip(p0, v)) for v in basis] + [p]) > len(basis):
            basis.append(w)
    r = len(basis)
    if r == 0:
        return [[] for _ in pts], 0
    G = [[Fraction(sum(a * b for a, b in zip(u, v))) for v in basis] for u in basis]
    coords = []
    for p in pts:
        z = [a - b for a, b in zip(p, p0)]
        rhs = [Fraction(sum(a * b for a, b in zip(u, z))) for u in basis]
        coords.append(solve_fraction(G, rhs))
    den = lcm(*(c.denominator for row in coords for c in row))
    return [[int(c * den) for c in row] for row in coords], r


def _normal(hpts: list[list[int]], r: int) -> list[int]:
    # cofactor vector: normal · w == det[u_1, ..., u_{r-1}, w]
    if r == 1:
        return [1]
    U = [[a - b for a, b in zip(h, hpts[0])] for h in hpts[1:]]
    out = []
    for j in range(r):
        minor = [[row[c] for c in range(r) if c != j] for row in U]
        out.append((-1) ** (r - 1 + j) * det_int(minor))
    return out


def _signs(x) -> np.ndarray:
    if isinstance(x, np.ndarray) and x.dtype == object:
        flat = [(v > 0) - (v < 0) for v in x.ravel()]
        return np.array(flat, dtype=np.int8).reshape(x.shape)
    return np.sign(x).astype(np.int8)


def _row_mask(row: np.ndarray) -> int:
    return int.from_bytes(np.packbits(row, bitorder="little").tobytes(), "little")


# -- halfplanes ----------------------------------------------------------------


def _halfplane_ranges(P: PointSet, col: _Collector) -> None:
    n = len(P)
    A = P.array
    degenerate: dict[tuple[int, int, int], tuple[int, int]] = {}
    if n >= 2:
        pairs = np.array(list(combinations(range(n), 2)), dtype=np.int64)
        chunk = max(1, 400_000 // max(n, 1))
        for s in range(0, len(pairs), chunk):
            Q = pairs[s : s + chunk]
            o = _signs(orient2d(A[Q[:, 0]][:, None, :], A[Q[:, 1]][:, None, :], A[None, :, :]))
            left, right, bnd = o > 0, o < 0, o == 0
            simple = bnd.sum(axis=1) == 2
            if simple.any():
                _emit_variants(col, left[simple], Q[simple], Q[simple])
                _emit_variants(col, right[simple], Q[simple], Q[simple])
            for r in np.flatnonzero(~simple):
                key = (_row_mask(left[r]), _row_mask(right[r]), _row_mask(bnd[r]))
                degenerate.setdefault(key, (int(Q[r, 0]), int(Q[r, 1])))
    for (left, right, bnd), gen in degenerate.items():
        Z = members(bnd)
        masks = []
        for local in halfspace_ranges([P.coords[i] for i in Z]):
            b = to_mask(Z[q] for q in range(len(Z)) if local >> q & 1)
            masks += [left | b, right | b]
        col.add_masks(masks, [gen] * len(masks))
    full = (1 << n) - 1
    col.add_masks([0, full] + [1 << i for i in range(n)], [(), ()] + [(i,) for i in range(n)])


# -- boxes, squares, intervals -------------------------------------------------


def box_ranges_ordered(P: PointSet) -> Iterator[tuple[tuple[tuple[int, int], ...], int]]:
    """Nonempty boxes as products of closed coordinate intervals.

    Yields ``(bounds, mask)`` in lexicographic order of
    ``bounds = ((lo_0, hi_0), (lo_1, hi_1), ...)``, skipping empty products.
    """
    d = P.dim
    per_axis = []
    for axis in range(d):
        vals = sorted({p[axis] for p in P.coords})
        at = {v: 0 for v in vals}
        for i, p in enumerate(P.coords):
            at[p[axis]] |= 1 << i
        ivs = []
        for a in range(len(vals)):
            m = 0
            for b in range(a, len(vals)):
                m |= at[vals[b]]
                ivs.append(((vals[a], vals[b]), m))
        per_axis.append(ivs)
    for combo in product(*per_axis):
        mask = combo[0][1]
        for _, m in combo[1:]:
            mask &= m
            if not mask:
                break
        if mask:
            yield tuple(b for b, _ in combo), mask


def _extreme_points(P: PointSet, mask: int) -> tuple[int, ...]:
    if not mask:
        return ()
    idx = members(mask)
    out = set()
    for axis in range(P.dim):
        out.add(min(idx, key=lambda i: (P.coords[i][axis], i)))
        out.add(max(idx, key=lambda i: (P.coords[i][axis], -i)))
    return tuple(sorted(out))[: 2 * P.dim]


def _square_ranges(P: PointSet, col: _Collector) -> None:
    # A nonempty square range S is realised by a square of side max(width, height)
    # of bbox(S); along the longer axis that square is pinned to two point
    # coordinates, and along the other it slides. Enumerate both cases.
    n = len(P)
    if n == 0:
        col.add_masks([0], [()])
        return
    A = np.array(P.coords, dtype=object if max(abs(v) for p in P.coords for v in p) > 2**50 else np.int64)
    for axis in (0, 1):
        u, v = A[:, axis], A[:, 1 - axis]
        uvals = sorted(set(int(x) for x in u))
        for a in range(len(uvals)):
            for b in range(a, len(uvals)):
                lo, hi = uvals[a], uvals[b]
                s4 = 4 * (hi - lo)
                idx = np.flatnonzero((u >= lo) & (u <= hi))
                vv = v[idx] * 4
                crit = np.unique(np.concatenate([vv, vv - s4]))
                cand = np.concatenate([crit, (crit[:-1] + crit[1:]) // 2])
                member = (vv[None, :] >= cand[:, None]) & (vv[None, :] <= cand[:, None] + s4)
                member = np.unique(member[member.any(axis=1)], axis=0)
                if member.shape[0] == 0:
                    continue
                rows = np.zeros((member.shape[0], n), dtype=bool)
                rows[:, idx] = member
                p_lo = int(idx[np.argmax(u[idx] == lo)])
                p_hi = int(idx[np.argmax(u[idx] == hi)])
                col.add_rows(rows, np.tile([p_lo, p_hi], (rows.shape[0], 1)))
    col.add_masks([0], [()])


def _interval_ranges(P: PointSet, col: _Collector) -> None:
    order = sorted(range(len(P)), key=lambda i: P.coords[i][0])
    masks, gens = [0], [()]
    for a in range(len(order)):
        m = 0
        for b in range(a, len(order)):
            m |= 1 << order[b]
            masks.append(m)
            gens.append((order[a], order[b]))
    col.add_masks(masks, gens)


# -- shrinking and sharpness -----------------------------------------------------


def shrink_range(H: AbstractHypergraph, e, i: int) -> tuple[int, ...]:
    """An edge of ``H`` inside ``e`` with exactly ``i`` vertices.

    Walks down a chain of edges losing one vertex at a time, falling back to
    an exhaustive search among sub-edges of size ``i``.
    """
    emask = e if isinstance(e, int) else to_mask(e)
    if emask not in H:
        raise InputError(f"{members(emask)} is not an edge")
    size = emask.bit_count()
    if not 0 <= i <= size:
        raise InputError(f"target size {i} outside [0, {size}]")
    by_size: dict[int, list[int]] = {}
    for m in H.masks:
        by_size.setdefault(m.bit_count(), []).append(m)
    cur = emask
    while cur.bit_count() > i:
        nxt = next((m for m in by_size.get(cur.bit_count() - 1, ()) if m & ~cur == 0), None)
        if nxt is None:
            break
        cur = nxt
    if cur.bit_count() == i:
        return tuple(members(cur))
    for m in by_size.get(i, ()):
        if m & ~emask == 0:
            return tuple(members(m))
    raise ShrinkabilityViolation(f"no edge of size {i} inside {members(emask)}")

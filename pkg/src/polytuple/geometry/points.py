"""Integer point sets and general-position validation."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from ..errors import InputError
from .predicates import det_int, exact_array, incircle, orient2d


class PointSet:
    """Distinct points with exact integer coordinates in dimension ``dim``.

    ``general_position`` may be asserted by a generator; when left as ``None``
    it is computed on first access by :func:`validate_general_position`.
    """

    def __init__(self, coords: Iterable[Sequence[int]], dim: int | None = None, general_position: bool | None = None):
        pts = []
        for p in coords:
            row = []
            for v in p:
                if isinstance(v, bool) or not isinstance(v, (int, np.integer)):
                    raise InputError(f"coordinate {v!r} is not an integer")
                row.append(int(v))
            pts.append(tuple(row))
        if dim is None:
            if not pts:
                raise InputError("dimension is required for an empty point set")
            dim = len(pts[0])
        if dim < 1:
            raise InputError(f"dimension must be >= 1, got {dim}")
        for p in pts:
            if len(p) != dim:
                raise InputError(f"point {p} does not have dimension {dim}")
        if len(set(pts)) != len(pts):
            raise InputError("points must be distinct")
        self.dim = dim
        self.coords: tuple[tuple[int, ...], ...] = tuple(pts)
        self._gp = general_position
        self._array = None

    def __len__(self) -> int:
        return len(self.coords)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PointSet):
            return NotImplemented
        return self.dim == other.dim and self.coords == other.coords

    def __repr__(self) -> str:
        return f"PointSet(dim={self.dim}, n={len(self.coords)})"

    @property
    def array(self) -> np.ndarray:
        if self._array is None:
            self._array = exact_array(self.coords) if self.coords else np.zeros((0, self.dim), dtype=np.int64)
        return self._array

    @property
    def general_position(self) -> bool:
        if self._gp is None:
            self._gp = validate_general_position(self).ok
        return self._gp

    def subset(self, idx: Iterable[int]) -> "PointSet":
        return PointSet([self.coords[i] for i in idx], self.dim, True if self._gp else None)


@dataclass
class GeneralPositionReport:
    cospherical: list[tuple[int, ...]] = field(default_factory=list)
    coplanar: list[tuple[int, ...]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.cospherical and not self.coplanar


def validate_general_position(P: PointSet, limit: int | None = None) -> GeneralPositionReport:
    """All (d+2)-subsets on a common sphere and (d+1)-subsets on a common hyperplane.

    ``limit`` stops collecting after that many violations of each kind.
    """
    rep = GeneralPositionReport()
    n, d = len(P), P.dim
    if d == 1 or n < d + 1:
        return rep
    if d == 2:
        _validate_2d(P, rep, limit)
    else:
        _validate_general(P, rep, limit)
    return rep


def _validate_2d(P: PointSet, rep: GeneralPositionReport, limit):
    A = P.array
    n = len(P)
    for i, j in combinations(range(n), 2):
        if j + 1 >= n:
            continue
        o = orient2d(A[i], A[j], A[j + 1 :])
        for k in np.flatnonzero(o == 0):
            rep.coplanar.append((i, j, j + 1 + int(k)))
    if limit is not None and len(rep.coplanar) >= limit:
        del rep.coplanar[limit:]
    if n < 4:
        return
    triples = np.array(list(combinations(range(n), 3)), dtype=np.int64)
    chunk = 8192
    for s in range(0, len(triples), chunk):
        T = triples[s : s + chunk]
        a, b, c = A[T[:, 0]][:, None, :], A[T[:, 1]][:, None, :], A[T[:, 2]][:, None, :]
        ic = incircle(a, b, c, A[None, :, :])
        col = np.arange(n)[None, :]
        hit = (ic == 0) & (col > T[:, 2:3])
        rows, cols = np.nonzero(hit)
        for r, l in zip(rows, cols):
            i, j, k = (int(v) for v in T[r])
            if orient2d(A[i], A[j], A[k]) == 0:
                continue
            rep.cospherical.append((i, j, k, int(l)))
            if limit is not None and len(rep.cospherical) >= limit:
                return


def _validate_general(P: PointSet, rep: GeneralPositionReport, limit):
    C = P.coords
    d = P.dim
    for S in combinations(range(len(C)), d + 1):
        p0 = C[S[0]]
        if det_int([[a - b for a, b in zip(C[i], p0)] for i in S[1:]]) == 0:
            rep.coplanar.append(S)
            if limit is not None and len(rep.coplanar) >= limit:
                break
    lift = [sum(v * v for v in p) for p in C]
    for S in combinations(range(len(C)), d + 2):
        p0 = C[S[0]]
        rows = [[a - b for a, b in zip(C[i], p0)] + [lift[i] - lift[S[0]]] for i in S[1:]]
        if det_int(rows) == 0:
            rep.cospherical.append(S)
            if limit is not None and len(rep.cospherical) >= limit:
                break


class IncrementalGeneralPosition:
    """Grows a general-position set one candidate point at a time."""

    def __init__(self, dim: int, int64_ok: bool):
        self.dim = dim
        self.points: list[tuple[int, ...]] = []
        self._seen: set[tuple[int, ...]] = set()
        self._dtype = np.int64 if int64_ok else object
        self._arr = np.zeros((0, dim), dtype=self._dtype)
        self._pairs = np.zeros((0, 2), dtype=np.int64)
        self._triples = np.zeros((0, 3), dtype=np.int64)

    def try_add(self, cand: Sequence[int]) -> bool:
        cand = tuple(int(v) for v in cand)
        if cand in self._seen or self._violates(cand):
            return False
        m = len(self.points)
        if self.dim == 2:
            # new pairs/triples all end at the new index m
            if m >= 1:
                self._pairs = np.vstack([self._pairs, np.column_stack([np.arange(m), np.full(m, m)])])
            if m >= 2:
                old = self._pairs[: len(self._pairs) - m]
                self._triples = np.vstack([self._triples, np.column_stack([old, np.full(len(old), m)])])
        self.points.append(cand)
        self._seen.add(cand)
        self._arr = np.vstack([self._arr, np.array([cand], dtype=self._dtype)])
        return True

    def _violates(self, cand: tuple[int, ...]) -> bool:
        d, m = self.dim, len(self.points)
        if d == 1 or m < d:
            return False
        if d == 2:
            A = self._arr
            p = np.array(cand, dtype=self._dtype)[None, :]
            pr = self._pairs
            if len(pr) and (orient2d(A[pr[:, 0]], A[pr[:, 1]], p) == 0).any():
                return True
            tr = self._triples
            if len(tr):
                a, b, c = A[tr[:, 0]], A[tr[:, 1]], A[tr[:, 2]]
                # the existing set has no collinear triple, so every triple defines a circle
                if (incircle(a, b, c, p) == 0).any():
                    return True
            return False
        E = self.points
        for S in combinations(range(m), d):
            if det_int([[a - b for a, b in zip(E[i], cand)] for i in S]) == 0:
                return True
        lc = sum(v * v for v in cand)
        for S in combinations(range(m), d + 1):
            rows = [[a - b for a, b in zip(E[i], cand)] + [sum(v * v for v in E[i]) - lc] for i in S]
            if det_int(rows) == 0:
                return True
        return False

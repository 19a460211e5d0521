"""Abstract hypergraphs on dense integer vertices, plus depth, projection,
VC-dimension, shrinkability and the Sauer-Shelah-Perles self-test.

Edges are stored as Python-int bitsets, deduplicated at construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable, Mapping, Sequence

import numpy as np

from .combinatorics import (
    all_tuples,
    masks_to_matrix,
    members,
    to_mask,
    tuple_rank,
    tuple_unrank,
)
from .errors import InputError, ResourceError

DEFAULT_VC_BUDGET = 2**24
DEFAULT_TUPLE_BUDGET = 5_000_000


class AbstractHypergraph:
    """Vertices ``0..n-1`` and a deduplicated family of edges.

    ``generators`` optionally maps an edge bitmask to the indices of the
    geometric object's defining points.
    """

    __slots__ = ("n", "masks", "generators", "_incidence", "_sizes", "_edges", "_set")

    def __init__(
        self,
        n: int,
        masks: Iterable[int],
        generators: Mapping[int, tuple[int, ...]] | None = None,
    ):
        if n < 0:
            raise InputError(f"vertex count must be nonnegative, got {n}")
        uniq = sorted(set(masks))
        if uniq and (uniq[0] < 0 or uniq[-1] >> n):
            bad = next(m for m in uniq if m < 0 or m >> n)
            raise InputError(f"edge {members(bad) if bad >= 0 else bad} has a vertex outside [0, {n})")
        self.n = n
        self.masks: tuple[int, ...] = tuple(uniq)
        self.generators = dict(generators) if generators else None
        self._incidence = None
        self._sizes = None
        self._edges = None
        self._set = None

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[Iterable[int]],
        generators: Sequence[Sequence[int]] | None = None,
    ) -> "AbstractHypergraph":
        masks = []
        for e in edges:
            e = list(e)
            for v in e:
                if not isinstance(v, (int, np.integer)) or isinstance(v, bool):
                    raise InputError(f"vertex index {v!r} is not an integer")
                if v < 0 or v >= n:
                    raise InputError(f"vertex index {v} outside [0, {n})")
            masks.append(to_mask(e))
        gens = None
        if generators is not None:
            if len(generators) != len(masks):
                raise InputError("generators must align with edges")
            gens = {}
            for m, g in zip(masks, generators):
                gens.setdefault(m, tuple(int(x) for x in g))
        return cls(n, masks, gens)

    def __len__(self) -> int:
        return len(self.masks)

    def __eq__(self, other) -> bool:
        if not isinstance(other, AbstractHypergraph):
            return NotImplemented
        return self.n == other.n and self.masks == other.masks

    def __hash__(self):
        return hash((self.n, self.masks))

    def __repr__(self) -> str:
        return f"AbstractHypergraph(n={self.n}, edges={len(self.masks)})"

    def __contains__(self, edge) -> bool:
        m = edge if isinstance(edge, int) else to_mask(edge)
        if self._set is None:
            self._set = frozenset(self.masks)
        return m in self._set

    @property
    def edges(self) -> list[tuple[int, ...]]:
        """Edges as sorted tuples, in lexicographic order."""
        if self._edges is None:
            self._edges = sorted(tuple(members(m)) for m in self.masks)
        return self._edges

    @property
    def sizes(self) -> np.ndarray:
        if self._sizes is None:
            self._sizes = np.fromiter((m.bit_count() for m in self.masks), dtype=np.int64, count=len(self.masks))
        return self._sizes

    @property
    def incidence(self) -> np.ndarray:
        if self._incidence is None:
            self._incidence = masks_to_matrix(self.masks, self.n)
        return self._incidence

    def generator_of(self, edge) -> tuple[int, ...] | None:
        if not self.generators:
            return None
        m = edge if isinstance(edge, int) else to_mask(edge)
        return self.generators.get(m)


@dataclass(frozen=True)
class DepthTable:
    """Depth of every ``t``-subset of ``range(n)``, stored in rank order."""

    n: int
    t: int
    depths: np.ndarray

    def __getitem__(self, tup: Sequence[int]) -> int:
        return int(self.depths[tuple_rank(sorted(tup), self.n)])

    def __len__(self) -> int:
        return len(self.depths)

    def items(self):
        return zip(all_tuples(self.n, self.t), (int(d) for d in self.depths))

    def max_entry(self) -> tuple[tuple[int, ...], int]:
        # np.argmax returns the first maximum, i.e. the lexicographically smallest tuple
        r = int(np.argmax(self.depths))
        return tuple_unrank(r, self.n, self.t), int(self.depths[r])


def _check_tuple(H: AbstractHypergraph, S: Iterable[int]) -> tuple[int, ...]:
    S = tuple(sorted(S))
    if len(set(S)) != len(S):
        raise InputError(f"tuple {S} has repeated vertices")
    for v in S:
        if v < 0 or v >= H.n:
            raise InputError(f"vertex index {v} outside [0, {H.n})")
    return S


def depth_of(H: AbstractHypergraph, S: Iterable[int]) -> int:
    """Minimum of ``|e \\ S|`` over edges ``e`` containing ``S``; ``n - |S|`` if none does."""
    S = _check_tuple(H, S)
    s = to_mask(S)
    best = H.n - len(S)
    for e in H.masks:
        if e & s == s:
            d = e.bit_count() - len(S)
            if d < best:
                best = d
    return best


def project(H: AbstractHypergraph, X: Iterable[int]) -> tuple[AbstractHypergraph, tuple[int, ...]]:
    """Restrict every edge to ``X`` and re-index ``X`` to ``0..|X|-1``.

    Returns the projected hypergraph and the index map (new index -> old index).
    """
    X = tuple(sorted(set(X)))
    for v in X:
        if v < 0 or v >= H.n:
            raise InputError(f"vertex index {v} outside [0, {H.n})")
    xmask = to_mask(X)
    out = set()
    for e in H.masks:
        r = e & xmask
        if r in out:
            continue
        out.add(r)
    remapped = set()
    for r in out:
        new = 0
        for i, v in enumerate(X):
            if r >> v & 1:
                new |= 1 << i
        remapped.add(new)
    return AbstractHypergraph(len(X), remapped), X


def vc_dimension(H: AbstractHypergraph, cap: int | None = None, budget: int = DEFAULT_VC_BUDGET) -> int:
    """Size of the largest shattered vertex subset (exhaustive, at most ``cap``).

    Only subsets whose every one-smaller subset is shattered are tested, since
    shattering is closed under taking subsets. ``budget`` bounds the number of
    subset tests.
    """
    n = H.n
    cap = n if cap is None else min(cap, n)
    if cap < 0:
        raise InputError("cap must be nonnegative")
    edges = H.masks
    if not edges:
        # nothing is shattered, not even the empty set
        return 0
    tests = 0
    best = 0
    level = {0}
    for s in range(1, cap + 1):
        if (1 << s) > len(edges):
            break
        nxt = set()
        for base in level:
            for v in range(base.bit_length(), n):
                # each X is generated once, from X minus its largest vertex
                X = base | (1 << v)
                # all (s-1)-subsets must already be shattered
                ok = True
                for u in members(X):
                    if X ^ (1 << u) not in level:
                        ok = False
                        break
                if not ok:
                    continue
                tests += 1
                if tests > budget:
                    raise ResourceError(f"VC-dimension search exceeded {budget} subset tests")
                traces = set()
                need = 1 << s
                for e in edges:
                    traces.add(e & X)
                    if len(traces) == need:
                        nxt.add(X)
                        break
        if not nxt:
            break
        best = s
        level = nxt
    return best


def is_shrinkable(H: AbstractHypergraph) -> tuple[bool, tuple[tuple[int, ...], int] | None]:
    """Every edge has sub-edges of every size ``1..|e|``.

    Returns ``(True, None)`` or ``(False, (edge, i))`` for the first failure,
    scanning edges in lexicographic order and ``i`` ascending.
    """
    by_size: dict[int, list[int]] = {}
    for m in H.masks:
        by_size.setdefault(m.bit_count(), []).append(m)
    for edge in H.edges:
        e = to_mask(edge)
        for i in range(1, len(edge)):
            if not any(m & ~e == 0 for m in by_size.get(i, ())):
                return False, (edge, i)
    return True, None


def sauer_shelah_check(H: AbstractHypergraph, budget: int = DEFAULT_VC_BUDGET) -> bool:
    d = vc_dimension(H, budget=budget)
    return len(H.masks) <= sum(comb(H.n, i) for i in range(d + 1))


def tuple_depth_table(H: AbstractHypergraph, t: int, budget: int = DEFAULT_TUPLE_BUDGET) -> DepthTable:
    """Depth of every ``t``-subset. Matches :func:`depth_of` entry by entry."""
    n = H.n
    if not 1 <= t <= n:
        raise InputError(f"tuple size t={t} must satisfy 1 <= t <= n={n}")
    total = comb(n, t)
    if total > budget:
        raise ResourceError(f"C({n},{t}) = {total} tuples exceeds budget {budget}")
    depths = np.full(total, n - t, dtype=np.int64)
    if not H.masks:
        return DepthTable(n, t, depths)
    sizes = H.sizes
    order = np.argsort(sizes, kind="stable")
    E = H.incidence[order]
    sizes = sizes[order]
    if t == 2:
        _pair_depths_layered(E, sizes, n, depths)
    elif t == 1:
        for v in range(n):
            rows = E[:, v]
            if rows.any():
                depths[v] = sizes[rows].min() - 1
    else:
        for r, tup in enumerate(all_tuples(n, t)):
            rows = E[:, tup[0]]
            for v in tup[1:]:
                rows = rows & E[:, v]
            hit = np.flatnonzero(rows)
            if hit.size:
                # rows are sorted by size, so the first hit is the minimum
                depths[r] = sizes[hit[0]] - t
    return DepthTable(n, t, depths)


def _pair_depths_layered(E: np.ndarray, sizes: np.ndarray, n: int, depths: np.ndarray) -> None:
    # Process edges by increasing size; a pair's depth is fixed by the first layer covering it.
    assigned = np.zeros((n, n), dtype=bool)
    np.fill_diagonal(assigned, True)
    iu = np.triu_indices(n, 1)
    out = np.full((n, n), -1, dtype=np.int64)
    bounds = np.flatnonzero(np.diff(sizes)) + 1
    starts = np.concatenate(([0], bounds))
    ends = np.concatenate((bounds, [len(sizes)]))
    chunk = 1 << 15
    for a, b in zip(starts, ends):
        s = int(sizes[a])
        if s < 2:
            continue
        cover = np.zeros((n, n), dtype=bool)
        for c in range(a, b, chunk):
            block = E[c : min(b, c + chunk)].astype(np.float32)
            cover |= (block.T @ block) > 0.5
        new = cover & ~assigned
        if new.any():
            out[new] = s - 2
            assigned |= new
            if assigned.all():
                break
    vals = out[iu]
    mask = vals >= 0
    depths[mask] = vals[mask]


def max_deep_tuple(H: AbstractHypergraph, t: int, budget: int = DEFAULT_TUPLE_BUDGET) -> tuple[tuple[int, ...], int]:
    """Deepest ``t``-tuple; ties go to the lexicographically smallest tuple."""
    return tuple_depth_table(H, t, budget).max_entry()


def depth_table_bruteforce(H: AbstractHypergraph, t: int) -> DepthTable:
    """Reference table built from :func:`depth_of` alone (slow; for checking)."""
    vals = [depth_of(H, tup) for tup in combinations(range(H.n), t)]
    return DepthTable(H.n, t, np.array(vals, dtype=np.int64))

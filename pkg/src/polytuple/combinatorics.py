"""Bitmask and tuple-ranking helpers shared by every module.

Vertex sets are Python ints used as bitsets (bit ``i`` set <=> vertex ``i``
present). Tuples are strictly increasing index sequences, ranked in
lexicographic order among all ``t``-subsets of ``range(n)``.
"""

from __future__ import annotations

from itertools import combinations
from math import comb
from typing import Iterable, Iterator, Sequence

import numpy as np


def to_mask(members: Iterable[int]) -> int:
    m = 0
    for v in members:
        m |= 1 << v
    return m


def members(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def iter_members(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def masks_to_matrix(masks: Sequence[int], n: int) -> np.ndarray:
    """Dense ``(len(masks), n)`` boolean incidence matrix."""
    if not masks:
        return np.zeros((0, n), dtype=bool)
    nbytes = max(1, (n + 7) // 8)
    buf = b"".join(m.to_bytes(nbytes, "little") for m in masks)
    packed = np.frombuffer(buf, dtype=np.uint8).reshape(len(masks), nbytes)
    return np.unpackbits(packed, axis=1, bitorder="little")[:, :n].astype(bool)


def packed_rows_to_masks(packed: np.ndarray) -> list[int]:
    """Inverse of ``np.packbits(rows, axis=1, bitorder='little')``."""
    if packed.shape[0] == 0:
        return []
    packed = np.ascontiguousarray(packed, dtype=np.uint8)
    width = packed.shape[1]
    raw = packed.tobytes()
    fb = int.from_bytes
    return [fb(raw[i : i + width], "little") for i in range(0, len(raw), width)]


def bool_vector_to_mask(row: np.ndarray) -> int:
    return int.from_bytes(np.packbits(row, bitorder="little").tobytes(), "little")


def tuple_rank(tup: Sequence[int], n: int) -> int:
    """Lexicographic rank of a sorted tuple among all ``len(tup)``-subsets of ``range(n)``."""
    t = len(tup)
    r = comb(n, t) - 1
    for i, c in enumerate(tup):
        r -= comb(n - 1 - c, t - i)
    return r


def tuple_unrank(rank: int, n: int, t: int) -> tuple[int, ...]:
    out = []
    v = 0
    for i in range(t):
        while True:
            block = comb(n - 1 - v, t - i - 1)
            if rank < block:
                break
            rank -= block
            v += 1
        out.append(v)
        v += 1
    return tuple(out)


class Ranker:
    """Vectorised lexicographic ranking of ``t``-tuples over ``range(n)``."""

    def __init__(self, n: int, t: int):
        self.n = n
        self.t = t
        self.total = comb(n, t)
        if self.total >= 2**62:
            raise OverflowError("tuple count does not fit in int64")
        table = np.zeros((n + 1, t + 1), dtype=np.int64)
        for a in range(n + 1):
            for b in range(t + 1):
                table[a, b] = comb(a, b)
        self._table = table

    def rank(self, combos: np.ndarray) -> np.ndarray:
        """Ranks of the rows of an ``(m, t)`` array of sorted tuples."""
        combos = np.asarray(combos, dtype=np.int64)
        r = np.full(combos.shape[0], self.total - 1, dtype=np.int64)
        for i in range(self.t):
            r -= self._table[self.n - 1 - combos[:, i], self.t - i]
        return r

    def ranks_within(self, idx: np.ndarray) -> np.ndarray:
        """Ranks of every ``t``-subset of the sorted index array ``idx``."""
        idx = np.asarray(idx, dtype=np.int64)
        s = idx.shape[0]
        if s < self.t:
            return np.zeros(0, dtype=np.int64)
        if self.t == 1:
            return idx.copy()
        if self.t == 2:
            i, j = np.triu_indices(s, 1)
            a, b = idx[i], idx[j]
            return a * (2 * self.n - a - 1) // 2 + (b - a - 1)
        local = np.array(list(combinations(range(s), self.t)), dtype=np.int64)
        return self.rank(idx[local])


def all_tuples(n: int, t: int) -> Iterator[tuple[int, ...]]:
    """All ``t``-subsets of ``range(n)`` in rank order."""
    return combinations(range(n), t)

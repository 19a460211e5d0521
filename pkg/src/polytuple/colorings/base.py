"""Tuple and vertex colorings."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable, Iterator, Sequence

import numpy as np

from ..combinatorics import all_tuples, tuple_rank
from ..errors import InputError


class TupleColoring:
    """Total map from the sorted ``t``-subsets of ``range(n)`` to ``0..k-1``.

    ``colors[r]`` is the color of the tuple of lexicographic rank ``r``.
    """

    __slots__ = ("n", "t", "k", "colors")

    def __init__(self, n: int, t: int, k: int, colors):
        if k < 1:
            raise InputError(f"color count must be positive, got {k}")
        if not 1 <= t <= max(n, 1):
            raise InputError(f"tuple size t={t} must satisfy 1 <= t <= n={n}")
        colors = np.asarray(colors, dtype=np.int64)
        if colors.shape != (comb(n, t),):
            raise InputError(f"expected {comb(n, t)} colors, got {colors.shape}")
        if colors.size and (colors.min() < 0 or colors.max() >= k):
            raise InputError(f"colors must lie in [0, {k})")
        self.n, self.t, self.k = n, t, k
        self.colors = colors

    @classmethod
    def constant(cls, n: int, t: int, k: int, color: int = 0) -> "TupleColoring":
        return cls(n, t, k, np.full(comb(n, t), color, dtype=np.int64))

    @classmethod
    def from_entries(cls, n: int, t: int, k: int, entries: Iterable[Sequence[int]]) -> "TupleColoring":
        colors = np.full(comb(n, t), -1, dtype=np.int64)
        for row in entries:
            tup, c = list(row[:-1]), row[-1]
            if len(tup) != t or sorted(set(tup)) != tup or tup[0] < 0 or tup[-1] >= n:
                raise InputError(f"bad tuple {tup}")
            colors[tuple_rank(tup, n)] = c
        if (colors < 0).any():
            raise InputError("coloring is not total")
        return cls(n, t, k, colors)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TupleColoring):
            return NotImplemented
        return (self.n, self.t, self.k) == (other.n, other.t, other.k) and np.array_equal(self.colors, other.colors)

    def __repr__(self) -> str:
        return f"TupleColoring(n={self.n}, t={self.t}, k={self.k})"

    def color(self, tup: Sequence[int]) -> int:
        return int(self.colors[tuple_rank(sorted(tup), self.n)])

    def items(self) -> Iterator[tuple[tuple[int, ...], int]]:
        return zip(all_tuples(self.n, self.t), (int(c) for c in self.colors))

    def classes(self) -> list[np.ndarray]:
        """Tuple ranks of each color class."""
        order = np.argsort(self.colors, kind="stable")
        cuts = np.searchsorted(self.colors[order], np.arange(1, self.k))
        return np.split(order, cuts)


@dataclass
class VertexColoring:
    """Colors ``0..x-1`` for each of ``n`` vertices."""

    n: int
    x: int
    assignment: np.ndarray

    def __post_init__(self):
        self.assignment = np.asarray(self.assignment, dtype=np.int64)
        if self.assignment.shape != (self.n,):
            raise InputError(f"expected {self.n} vertex colors")
        if self.x < 1 or (self.n and (self.assignment.min() < 0 or self.assignment.max() >= self.x)):
            raise InputError(f"vertex colors must lie in [0, {self.x})")

    def __eq__(self, other) -> bool:
        if not isinstance(other, VertexColoring):
            return NotImplemented
        return self.n == other.n and self.x == other.x and np.array_equal(self.assignment, other.assignment)

    def as_tuple_coloring(self) -> TupleColoring:
        return TupleColoring(self.n, 1, self.x, self.assignment)

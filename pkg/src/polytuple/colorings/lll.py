"""Random tuple colorings repaired by resampling (Moser-Tardos).

Bad events are ranges holding between ``m`` and ``2m`` points whose tuples
miss a color. Events are scanned in a fixed order. The first violated one has
all of its tuples recolored, and the scan restarts from the beginning.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from decimal import Decimal, localcontext
from math import comb

import numpy as np

from ..combinatorics import Ranker, members
from ..errors import InputError, NonTerminationError
from ..geometry.points import PointSet
from ..geometry.ranges import RangeKind, box_ranges_ordered, enumerate_ranges
from ..hypergraph import AbstractHypergraph
from .base import TupleColoring

SHAPES = ("rects2d", "boxes", "balls")


def lll_threshold(c, k: int, t: int) -> int:
    """Least integer ``m`` with ``m^t >= c * k * ln k``."""
    with localcontext() as ctx:
        ctx.prec = 60
        target = Decimal(str(c)) * k * Decimal(k).ln()
    m = 1
    while Decimal(m) ** t < target:
        m += 1
    return m


@dataclass(frozen=True)
class LLLParams:
    k: int
    seed: int
    t: int = 2
    shape: str = "rects2d"
    c: float = 126
    m: int | None = None
    max_rounds: int = 10**6

    def __post_init__(self):
        if self.shape not in SHAPES:
            raise InputError(f"shape must be one of {SHAPES}")
        if self.k < 2:
            raise InputError("k must be at least 2")
        if self.t < 1:
            raise InputError("t must be positive")
        if self.shape == "rects2d" and self.t == 2 and self.c < 126:
            raise InputError("pair colorings of rectangles need c >= 126")
        if self.m is None:
            object.__setattr__(self, "m", lll_threshold(self.c, self.k, self.t))
        if self.m < self.t + 1:
            raise InputError(f"threshold m={self.m} must be at least t+1={self.t + 1}")
        if self.max_rounds < 0:
            raise InputError("max_rounds must be nonnegative")


@dataclass
class ResampleRecord:
    round: int
    event: int
    pairs_resampled: int

    def as_dict(self) -> dict:
        return {"round": self.round, "event": self.event, "pairs_resampled": self.pairs_resampled}


@dataclass
class LLLResult:
    coloring: TupleColoring
    log: list[ResampleRecord] = field(default_factory=list)
    events: int = 0
    m: int = 0


def _ordered_ranges(P: PointSet, shape: str) -> list[int]:
    if shape in ("rects2d", "boxes"):
        if shape == "rects2d" and P.dim != 2:
            raise InputError("rects2d needs planar points")
        return [mask for _, mask in box_ranges_ordered(P)]
    H = enumerate_ranges(P, RangeKind.BALLS, allow_degenerate=True)
    return [m for m in sorted(H.masks, key=members) if m]


def lll_tuple_coloring(P: PointSet, params: LLLParams) -> LLLResult:
    """Resample until no range with ``m..2m`` points misses a color.

    Deterministic in ``(P, params)``. Raises :class:`NonTerminationError`
    after ``params.max_rounds`` resamplings.
    """
    n, t, k, m = len(P), params.t, params.k, params.m
    if n < t:
        raise InputError(f"need at least t={t} points")
    ranges = _ordered_ranges(P, params.shape)
    events = [e for e in ranges if m <= e.bit_count() <= 2 * m]
    rng = np.random.Generator(np.random.Philox(params.seed))
    colors = rng.integers(0, k, size=comb(n, t), dtype=np.int64)
    ranker = Ranker(n, t)
    ranks = [None] * len(events)

    def event_ranks(i: int) -> np.ndarray:
        if ranks[i] is None:
            ranks[i] = ranker.ranks_within(np.array(members(events[i]), dtype=np.int64))
        return ranks[i]

    log: list[ResampleRecord] = []
    i = 0
    while i < len(events):
        r = event_ranks(i)
        if np.count_nonzero(np.bincount(colors[r], minlength=k)) < k:
            if len(log) >= params.max_rounds:
                raise NonTerminationError(f"no valid coloring after {params.max_rounds} resamplings")
            colors[r] = rng.integers(0, k, size=len(r), dtype=np.int64)
            log.append(ResampleRecord(len(log) + 1, i, len(r)))
            i = 0
            continue
        if ranks[i] is not None and len(events) > 50_000:
            # keep memory bounded on large grids; only violated events are revisited often
            ranks[i] = None
        i += 1
    return LLLResult(TupleColoring(n, t, k, colors), log, len(events), m)


def is_full_grid(P: PointSet) -> bool:
    if P.dim != 2:
        return False
    xs = {p[0] for p in P.coords}
    ys = {p[1] for p in P.coords}
    return len(P) == len(xs) * len(ys)


def lll_grid_pair_coloring(grid: PointSet, params: LLLParams) -> LLLResult:
    if params.shape != "rects2d" or params.t != 2:
        raise InputError("grid pair coloring uses rects2d with t=2")
    if not is_full_grid(grid):
        raise InputError("input is not a full rectangular grid")
    return lll_tuple_coloring(grid, params)


def ranges_at_least(P: PointSet, shape: str, m: int) -> AbstractHypergraph:
    """Every range of the family with at least ``m`` points (for final checks)."""
    return AbstractHypergraph(len(P), [e for e in _ordered_ranges(P, shape) if e.bit_count() >= m])

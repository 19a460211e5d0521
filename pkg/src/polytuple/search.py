"""Verification of polychromatic colorings and exact backtracking search.

An edge with fewer than ``t`` vertices holds no tuple and is treated as
satisfied at every threshold.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from math import comb

import numpy as np

from .colorings.base import TupleColoring, VertexColoring
from .combinatorics import Ranker, iter_members, members
from .errors import InputError, SearchIndeterminate
from .hypergraph import AbstractHypergraph


@dataclass(frozen=True)
class SearchBudget:
    max_nodes: int = 2_000_000
    time_limit: float = 60.0

    def __post_init__(self):
        if self.max_nodes <= 0 or self.time_limit <= 0:
            raise InputError("search budgets must be positive")


@dataclass
class Violation:
    edge: tuple[int, ...]
    missing_colors: list[int]


@dataclass
class VerificationReport:
    ok: bool
    f: int
    violations: list[Violation] = field(default_factory=list)
    edges_checked: int = 0
    nodes: int = 0


def verify_polychromatic(
    H: AbstractHypergraph,
    coloring: TupleColoring,
    f: int,
    max_violations: int | None = None,
) -> VerificationReport:
    """Check that every edge with at least ``f`` vertices holds all ``k`` colors."""
    if coloring.n != H.n:
        raise InputError(f"coloring covers {coloring.n} vertices, hypergraph has {H.n}")
    t, k = coloring.t, coloring.k
    lo = max(f, t)
    rep = VerificationReport(ok=True, f=f)
    todo = [e for e in H.masks if e.bit_count() >= lo]
    rep.edges_checked = len(todo)
    if t == 1:
        cm = _class_masks(coloring.colors, k)
        find = lambda e: [c for c in range(k) if not cm[c] & e]  # noqa: E731
    elif t == 2:
        nbr = _neighbour_masks(coloring, k)
        find = lambda e: _missing_pairs(e, nbr, k)  # noqa: E731
    else:
        ranker = Ranker(H.n, t)
        find = lambda e: _missing_general(e, coloring, ranker)  # noqa: E731
    for e in todo:
        miss = find(e)
        if miss:
            rep.violations.append(Violation(tuple(members(e)), miss))
            if max_violations is not None and len(rep.violations) >= max_violations:
                break
    rep.violations.sort(key=lambda v: v.edge)
    rep.ok = not rep.violations
    return rep


def _class_masks(colors: np.ndarray, k: int) -> list[int]:
    out = []
    for c in range(k):
        row = colors == c
        out.append(int.from_bytes(np.packbits(row, bitorder="little").tobytes(), "little"))
    return out


def _neighbour_masks(coloring: TupleColoring, k: int) -> list[list[int]]:
    # nbr[c][v]: vertices u with pair {u, v} colored c
    n = coloring.n
    M = np.full((n, n), -1, dtype=np.int64)
    i, j = np.triu_indices(n, 1)
    M[i, j] = coloring.colors
    M[j, i] = coloring.colors
    width = max(1, (n + 7) // 8)
    out = []
    for c in range(k):
        raw = np.packbits(M == c, axis=1, bitorder="little").tobytes()
        out.append([int.from_bytes(raw[r * width : (r + 1) * width], "little") for r in range(n)])
    return out


def _missing_pairs(e: int, nbr: list[list[int]], k: int) -> list[int]:
    need = list(range(k))
    for v in iter_members(e):
        need = [c for c in need if not nbr[c][v] & e]
        if not need:
            return []
    return need


def _missing_general(e: int, coloring: TupleColoring, ranker: Ranker) -> list[int]:
    idx = np.array(members(e), dtype=np.int64)
    seen = np.unique(coloring.colors[ranker.ranks_within(idx)])
    if len(seen) == coloring.k:
        return []
    return sorted(set(range(coloring.k)) - set(int(c) for c in seen))


# -- exact search -------------------------------------------------------------


def _minimal_constrained(H: AbstractHypergraph, lo: int) -> list[int]:
    big = sorted((e for e in H.masks if e.bit_count() >= lo), key=lambda m: (m.bit_count(), m))
    keep: list[int] = []
    for e in big:
        if not any(m & ~e == 0 for m in keep):
            keep.append(e)
    return keep


def exists_polychromatic(
    H: AbstractHypergraph,
    t: int,
    k: int,
    f: int,
    budget: SearchBudget | None = None,
) -> TupleColoring | None:
    """A ``(t, k, f)``-polychromatic coloring, or ``None`` if provably none exists.

    Raises :class:`SearchIndeterminate` when the budget runs out first.
    Tuples outside every constrained edge get color 0.
    """
    if not 1 <= t <= H.n:
        raise InputError(f"tuple size t={t} must satisfy 1 <= t <= n={H.n}")
    if k < 1:
        raise InputError("k must be positive")
    budget = budget or SearchBudget()
    colors = np.zeros(comb(H.n, t), dtype=np.int64)
    cons_edges = _minimal_constrained(H, max(f, t))
    if k == 1 or not cons_edges:
        return TupleColoring(H.n, t, k, colors)
    if any(comb(e.bit_count(), t) < k for e in cons_edges):
        return None
    ranker = Ranker(H.n, t)
    ranks = [ranker.ranks_within(np.array(members(e), dtype=np.int64)) for e in cons_edges]
    var_of = {int(r): i for i, r in enumerate(np.unique(np.concatenate(ranks)))}
    cons = [[var_of[int(r)] for r in rr] for rr in ranks]
    var_cons: list[list[int]] = [[] for _ in var_of]
    for ci, vs in enumerate(cons):
        for v in vs:
            var_cons[v].append(ci)
    assign = _backtrack(len(var_of), cons, var_cons, k, budget)
    if assign is None:
        return None
    for r, v in var_of.items():
        colors[r] = assign[v]
    return TupleColoring(H.n, t, k, colors)


def _backtrack(nvars, cons, var_cons, k, budget: SearchBudget):
    order = sorted(range(nvars), key=lambda v: (-len(var_cons[v]), v))
    assign = [-1] * nvars
    cnt = [[0] * k for _ in cons]
    missing = [k] * len(cons)
    unc = [len(c) for c in cons]
    used = [0] * k

    def place(v, c):
        ok = True
        used[c] += 1
        for ci in var_cons[v]:
            unc[ci] -= 1
            row = cnt[ci]
            if row[c] == 0:
                missing[ci] -= 1
            row[c] += 1
            if missing[ci] > unc[ci]:
                ok = False
        return ok

    def unplace(v, c):
        used[c] -= 1
        for ci in var_cons[v]:
            unc[ci] += 1
            row = cnt[ci]
            row[c] -= 1
            if row[c] == 0:
                missing[ci] += 1

    start = time.monotonic()
    nodes = 0
    opts: list[list[int] | None] = [None] * nvars
    d = 0
    while True:
        if d == nvars:
            return assign
        v = order[d]
        if opts[d] is None:
            # colors are interchangeable, so the first variable can be fixed
            opts[d] = [0] if d == 0 else sorted(range(k), key=lambda c: (used[c], c))
        if assign[v] != -1:
            unplace(v, assign[v])
            assign[v] = -1
        if not opts[d]:
            opts[d] = None
            d -= 1
            if d < 0:
                return None
            continue
        c = opts[d].pop(0)
        nodes += 1
        if nodes > budget.max_nodes:
            raise SearchIndeterminate(f"node budget {budget.max_nodes} exhausted", nodes)
        if nodes & 1023 == 0 and time.monotonic() - start > budget.time_limit:
            raise SearchIndeterminate(f"time budget {budget.time_limit}s exhausted", nodes)
        assign[v] = c
        if place(v, c):
            d += 1


def exact_f(H: AbstractHypergraph, t: int, k: int, budget: SearchBudget | None = None) -> int:
    """Least ``f >= 1`` admitting a ``(t, k, f)``-polychromatic coloring (1 with no edges)."""
    top = max((e.bit_count() for e in H.masks), default=0) + 1
    for f in range(1, top + 1):
        if exists_polychromatic(H, t, k, f, budget) is not None:
            return f
    return top


def find_vertex_coloring(
    H: AbstractHypergraph, k: int, f: int, budget: SearchBudget | None = None
) -> VertexColoring | None:
    col = exists_polychromatic(H, 1, k, f, budget)
    if col is None:
        return None
    return VertexColoring(H.n, k, col.colors)

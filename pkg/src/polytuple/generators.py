"""Deterministic instance generators."""

from __future__ import annotations

from itertools import product

import numpy as np

from .errors import InputError, ResourceError
from .geometry.points import IncrementalGeneralPosition, PointSet
from .geometry.predicates import INT64_SAFE_SPAN

RESAMPLE_FACTOR = 200


def gen_random_general_position(n: int, bbox: int, seed: int, dim: int = 2) -> PointSet:
    """``n`` integer points in ``[-bbox, bbox]^dim``, rejection-sampled into general position."""
    if n < 0 or bbox < 0 or dim < 1:
        raise InputError("n, bbox must be nonnegative and dim positive")
    if n > 1 and (2 * bbox + 1) ** dim < 10 * n * n:
        raise ResourceError(f"bounding box half-width {bbox} too small for {n} points (need (2*bbox+1)^dim >= 10*n^2)")
    rng = np.random.default_rng(seed)
    grow = IncrementalGeneralPosition(dim, 2 * bbox <= INT64_SAFE_SPAN)
    attempts = 0
    cap = RESAMPLE_FACTOR * max(n, 1) + 1000
    while len(grow.points) < n:
        attempts += 1
        if attempts > cap:
            raise ResourceError(f"gave up after {cap} samples with {len(grow.points)} of {n} points placed")
        cand = rng.integers(-bbox, bbox, size=dim, endpoint=True)
        grow.try_add(cand)
    return PointSet(grow.points, dim, general_position=True)


def gen_grid(*extents: int) -> PointSet:
    """Full integer grid ``range(a) x range(b) x ...`` in lexicographic order."""
    if not extents or any(int(a) < 1 for a in extents):
        raise InputError("grid extents must be positive")
    return PointSet(list(product(*(range(int(a)) for a in extents))), len(extents))


def gen_moment_curve(n: int, d: int) -> PointSet:
    """Points ``(i, i^2, ..., i^d)`` for ``i = 1..n``."""
    if n < 0 or d < 1:
        raise InputError("need n >= 0 and d >= 1")
    return PointSet([tuple(i**j for j in range(1, d + 1)) for i in range(1, n + 1)], d)

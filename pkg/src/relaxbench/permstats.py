"""Local-minima counts of rank sequences and alternation counts along paths.

The iteration count of the partitioned engines on a single-path instance is
governed by how often the rank sequence along the path dips: every interior
local minimum costs one extra outer iteration.  These helpers quantify that,
plus the tail threshold used to reason about unusually slow orderings.
"""

from __future__ import annotations

import math
from typing import Sequence

from .graph import Ordering


def count_local_minima(values: Sequence[float]) -> int:
    """Number of interior elements strictly smaller than both neighbours.

    Endpoints are never counted.  Rejects sequences with duplicate values;
    ranks are bijective so ties cannot occur in legal inputs.
    """
    if len(values) == 0:
        raise ValueError("sequence must have length >= 1")
    if len(set(values)) != len(values):
        raise ValueError("sequence values must be distinct")
    return sum(
        1
        for j in range(1, len(values) - 1)
        if values[j] < values[j - 1] and values[j] < values[j + 1]
    )


def local_minima_tail_threshold(n: int, c: float) -> float:
    """(n-2)/3 + sqrt(2*c*n*ln n): exceeded with probability at most 1/n^c.

    Uses the natural logarithm.  Requires n >= 3 (no interior otherwise).
    """
    if n < 3:
        raise ValueError(f"n must be >= 3, got {n}")
    if c <= 0:
        raise ValueError(f"c must be positive, got {c}")
    return (n - 2) / 3 + math.sqrt(2 * c * n * math.log(n))


def alternation_count(path_vertices: Sequence[int], ordering: Ordering) -> int:
    """Number of maximal monotone-rank runs along a path.

    Classifies each consecutive vertex pair as up (rank increases) or down
    (rank decreases) and returns 1 + the number of adjacent up/down changes.
    Requires at least one edge; consecutive vertices must differ (equal ranks
    would mean a repeated vertex).
    """
    if len(path_vertices) < 2:
        raise ValueError("path must have at least one edge")
    rank = ordering.rank
    steps = []
    for a, b in zip(path_vertices, path_vertices[1:]):
        if a == b:
            raise ValueError("consecutive path vertices must be distinct")
        steps.append(rank[b] > rank[a])
    runs = 1
    for prev, cur in zip(steps, steps[1:]):
        if prev != cur:
            runs += 1
    return runs

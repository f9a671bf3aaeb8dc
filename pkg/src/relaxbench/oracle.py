"""Slow, independent reference implementations used only for verification.

Nothing here shares code with the engines: distances come from an all-pairs
Floyd-Warshall recurrence over an adjacency matrix, and the shortest
simple-path lengths come from exhaustive path enumeration on tiny graphs.
The oracle represents "no path" as ``math.inf`` internally (engines use
``None``); callers convert when comparing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, Optional

from .graph import Edge, Graph

ORACLE_CAP = 256
SIMPLE_PATH_CAP = 8


@dataclass
class OracleResult:
    """All-pairs distances plus derived ground truth for one graph.

    ``dist[u][v]`` is the exact distance (``inf`` if unreachable); entries are
    only meaningful as distances when no negative cycle interferes, but the
    diagonal sign and the reachable-negative-cycle flag are always valid.
    ``sp_edges`` lists the edges lying on at least one shortest path from the
    source (meaningful for negative-cycle-free graphs).
    """

    dist: List[List[float]]
    has_reachable_negative_cycle: bool
    sp_edges: List[Edge]
    source: int


def floyd_warshall(g: Graph, cap: int = ORACLE_CAP) -> OracleResult:
    """Exact all-pairs distances by the classic triple loop.

    The negative-cycle flag is true iff some vertex u with a finite distance
    from the source has dist[u][u] < 0.  Rejects graphs with more than ``cap``
    vertices; this oracle is deliberately simple and slow.
    """
    if g.n > cap:
        raise ValueError(f"graph has {g.n} vertices, oracle cap is {cap}")
    n, s = g.n, g.source
    inf = math.inf
    dist = [[inf] * n for _ in range(n)]
    for i in range(n):
        dist[i][i] = 0.0
    for u, v, w in g.edges:
        if w < dist[u][v]:
            dist[u][v] = w
    for k in range(n):
        dk = dist[k]
        for i in range(n):
            dik = dist[i][k]
            if dik == inf:
                continue
            di = dist[i]
            for j in range(n):
                alt = dik + dk[j]
                if alt < di[j]:
                    di[j] = alt

    row_s = dist[s]
    has_cycle = any(row_s[u] < inf and dist[u][u] < 0 for u in range(n))
    sp_edges = [
        (u, v, w)
        for u, v, w in g.edges
        if u != v and row_s[u] < inf and row_s[u] + w == row_s[v]
    ]
    return OracleResult(dist, has_cycle, sp_edges, s)


def shortest_simple_path_lengths(g: Graph, cap: int = SIMPLE_PATH_CAP) -> List[Optional[float]]:
    """Length of the shortest *simple* path from the source to each vertex.

    Brute-force enumeration of every simple path, so the graph must have at
    most ``cap`` vertices.  The source gets 0.0 (the empty path); unreachable
    vertices get ``None``.  Well-defined even when negative cycles exist,
    which is exactly why the detectors' tests need it.
    """
    if g.n > cap:
        raise ValueError(f"graph has {g.n} vertices, simple-path cap is {cap}")
    n, s = g.n, g.source
    # Parallel edges collapse to the cheapest one; self-loops never lie on a
    # simple path.
    best_edge: dict[tuple[int, int], float] = {}
    for u, v, w in g.edges:
        if u == v:
            continue
        key = (u, v)
        if key not in best_edge or w < best_edge[key]:
            best_edge[key] = w
    adj: list[list[tuple[int, float]]] = [[] for _ in range(n)]
    for (u, v), w in sorted(best_edge.items()):
        adj[u].append((v, w))

    best: list[float] = [math.inf] * n
    best[s] = 0.0
    on_path = bytearray(n)

    def walk(u: int, acc: float) -> None:
        on_path[u] = 1
        for v, w in adj[u]:
            if not on_path[v]:
                total = acc + w
                if total < best[v]:
                    best[v] = total
                # No pruning: with negative edges a worse prefix can still
                # lead to a better continuation.
                walk(v, total)
        on_path[u] = 0

    walk(s, 0.0)
    return [b if b < math.inf else None for b in best]

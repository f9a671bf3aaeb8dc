"""Shared test utilities: strategies, conversions, and independent checkers."""

from __future__ import annotations

import math
from itertools import permutations

from hypothesis import assume
from hypothesis import strategies as st

from relaxbench import Graph, Ordering, floyd_warshall


def as_inf(dist):
    """Engine distances use None for unreached; the oracle uses inf."""
    return [math.inf if d is None else d for d in dist]


def reachable_from_source(g: Graph) -> set[int]:
    adj = g.out_adjacency()
    seen = {g.source}
    stack = [g.source]
    while stack:
        u = stack.pop()
        for v, _ in adj[u]:
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return seen


def brute_force_negative_cycle(g: Graph) -> bool:
    """Reachable-negative-cycle ground truth by simple-cycle enumeration.

    Independent of both the engines and the Floyd-Warshall oracle; only for
    tiny graphs.
    """
    reach = reachable_from_source(g)
    best: dict[tuple[int, int], float] = {}
    for u, v, w in g.edges:
        if u == v:
            if w < 0 and u in reach:
                return True
            continue
        if (u, v) not in best or w < best[(u, v)]:
            best[(u, v)] = w
    adj: dict[int, list[tuple[int, float]]] = {}
    for (u, v), w in best.items():
        adj.setdefault(u, []).append((v, w))

    found = False

    def walk(root: int, u: int, acc: float, on_path: set[int]) -> None:
        nonlocal found
        if found:
            return
        for v, w in adj.get(u, ()):
            if v == root and acc + w < 0:
                found = True
                return
            if v not in on_path and v > root:  # canonical root = smallest vertex
                on_path.add(v)
                walk(root, v, acc + w, on_path)
                on_path.remove(v)

    for root in sorted(reach):
        walk(root, root, 0.0, {root})
        if found:
            return True
    return False


def all_orderings(g: Graph):
    """Every valid ordering of g (source first), for exhaustive checks."""
    others = [v for v in range(g.n) if v != g.source]
    for perm in permutations(others):
        rank = [0] * g.n
        for pos, v in enumerate(perm, start=1):
            rank[v] = pos
        yield Ordering(tuple(rank))


@st.composite
def graphs(draw, max_n=6, min_weight=-3, max_weight=7, max_edges=12,
           allow_loops=True, any_source=True):
    """Small random multigraphs (parallel edges and self-loops allowed)."""
    n = draw(st.integers(min_value=1, max_value=max_n))
    edge = st.tuples(
        st.integers(0, n - 1),
        st.integers(0, n - 1),
        st.integers(min_weight, max_weight),
    )
    raw = draw(st.lists(edge, min_size=0, max_size=max_edges))
    edges = tuple(
        (u, v, float(w)) for u, v, w in raw if allow_loops or u != v
    )
    source = draw(st.integers(0, n - 1)) if any_source else 0
    return Graph(n, edges, source=source)


@st.composite
def cycle_free_graphs(draw, max_n=6, min_weight=-3, max_weight=7, max_edges=12):
    """Small graphs filtered negative-cycle-free by the oracle."""
    g = draw(graphs(max_n=max_n, min_weight=min_weight, max_weight=max_weight,
                    max_edges=max_edges))
    result = floyd_warshall(g)
    assume(not result.has_reachable_negative_cycle)
    return g, result


@st.composite
def orderings_for(draw, g: Graph):
    others = [v for v in range(g.n) if v != g.source]
    perm = draw(st.permutations(others))
    rank = [0] * g.n
    for pos, v in enumerate(perm, start=1):
        rank[v] = pos
    return Ordering(tuple(rank))

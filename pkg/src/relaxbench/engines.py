"""The four shortest-path engines built on one shared relaxation primitive.

All engines maintain per-vertex tentative distances and predecessors and count
every relaxation exactly.  ``Unreached`` is represented by ``None`` so that an
unreached tail can never participate in arithmetic.  The pass structure:

* ``run_basic``       fixed n-1 passes over the whole edge list;
* ``run_adaptive``    scans only vertices whose distance changed last round,
                      stopping as soon as a round changes nothing;
* ``run_yen``         adaptive passes over the two rank-induced acyclic
                      subgraphs, ascending then descending rank;
* ``run_randomized``  run_yen under a seeded uniform random ordering.

The stepwise generators (``basic_passes``, ``adaptive_iterations``,
``yen_iterations``) drive one outer iteration per ``next()`` and are reused by
the negative-cycle detectors and the per-iteration invariant tests.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Iterator, Optional

from .graph import Graph, Ordering, partition_edges, random_ordering


class SsspState:
    """Mutable single-run state: distances, predecessors, change tracking.

    Attributes:
        dist: per-vertex tentative distance, ``None`` while unreached.
        pred: per-vertex predecessor on the tentative path, ``None`` if unset.
        frontier: vertices whose distance changed in the previous outer
            iteration (the engines' work set).
        changed_now: per-vertex flag, set when the distance changed during the
            current outer iteration.
        relax_calls / improvements / iterations: exact counters.

    One run owns its state exclusively; states are never shared between runs.
    """

    __slots__ = ("n", "dist", "pred", "frontier", "changed_now", "_changed_order",
                 "relax_calls", "improvements", "iterations")

    def __init__(self, g: Graph):
        self.n = g.n
        self.dist: list[Optional[float]] = [None] * g.n
        self.pred: list[Optional[int]] = [None] * g.n
        self.dist[g.source] = 0.0
        self.frontier: set[int] = {g.source}
        self.changed_now = bytearray(g.n)
        self._changed_order: list[int] = []
        self.relax_calls = 0
        self.improvements = 0
        self.iterations = 0

    def relax(self, u: int, v: int, w: float) -> bool:
        """Relax the edge u -> v of weight w; return True iff dist[v] dropped.

        Requires dist[u] to be finite (callers skip unreached tails).  Ties
        never update: only a strict improvement rewrites dist and pred.
        """
        self.relax_calls += 1
        alt = self.dist[u] + w
        dv = self.dist[v]
        if dv is None or dv > alt:
            self.dist[v] = alt
            self.pred[v] = u
            if not self.changed_now[v]:
                self.changed_now[v] = 1
                self._changed_order.append(v)
            self.improvements += 1
            return True
        return False

    def begin_iteration(self) -> None:
        for v in self._changed_order:
            self.changed_now[v] = 0
        self._changed_order.clear()

    def end_iteration(self) -> None:
        self.frontier = set(self._changed_order)
        self.iterations += 1


@dataclass
class RunStats:
    """Summary counters for one engine run."""

    relax_calls: int
    improvements: int
    iterations: int
    terminated_early: bool
    negative_cycle: Optional[list[int]] = None


def _stats(state: SsspState, terminated_early: bool,
           negative_cycle: Optional[list[int]] = None) -> RunStats:
    return RunStats(state.relax_calls, state.improvements, state.iterations,
                    terminated_early, negative_cycle)


def basic_passes(g: Graph, strict: bool = False,
                 state: Optional[SsspState] = None) -> Iterator[SsspState]:
    """Drive the fixed-count engine one full edge pass at a time.

    Edges whose tail is unreached are skipped.  In strict mode the skipped
    call is still counted (no arithmetic happens), so a full run performs
    exactly m*(n-1) relax calls.
    """
    if state is None:
        state = SsspState(g)
    edges = g.edges
    for _ in range(g.n - 1):
        state.begin_iteration()
        for u, v, w in edges:
            if state.dist[u] is None:
                if strict:
                    state.relax_calls += 1
                continue
            state.relax(u, v, w)
        state.end_iteration()
        yield state


def adaptive_iterations(g: Graph, state: Optional[SsspState] = None) -> Iterator[SsspState]:
    """Drive the changed-vertices-only engine one outer iteration at a time.

    Each iteration relaxes the out-edges of every vertex in the frontier
    (ascending vertex index as the deterministic tie-break) and then rebuilds
    the frontier from the vertices whose distance dropped.  The generator is
    exhausted when an iteration changes nothing.
    """
    if state is None:
        state = SsspState(g)
    adj = g.out_adjacency()
    while state.frontier:
        state.begin_iteration()
        for u in sorted(state.frontier):
            for v, w in adj[u]:
                state.relax(u, v, w)
        state.end_iteration()
        yield state


def yen_iterations(g: Graph, ordering: Ordering,
                   state: Optional[SsspState] = None) -> Iterator[SsspState]:
    """Drive the two-subgraph engine one outer iteration at a time.

    An iteration is one ascending-rank pass over the rank-ascending subgraph
    followed by one descending-rank pass over the rank-descending subgraph.
    A vertex's out-edges are relaxed iff it is in the frontier or its distance
    already changed earlier in the same iteration, so the descending pass sees
    the ascending pass's updates.  Self-loops are relaxed by neither pass.
    """
    if state is None:
        state = SsspState(g)
    part = partition_edges(g, ordering)
    up_adj: list[list[tuple[int, float]]] = [[] for _ in range(g.n)]
    for u, v, w in part.plus:
        up_adj[u].append((v, w))
    down_adj: list[list[tuple[int, float]]] = [[] for _ in range(g.n)]
    for u, v, w in part.minus:
        down_adj[u].append((v, w))
    order = ordering.by_rank
    # Guards only matter for vertices that have out-edges in the pass.
    up_order = [u for u in order if up_adj[u]]
    down_order = [u for u in reversed(order) if down_adj[u]]

    changed_now = state.changed_now
    relax = state.relax
    while state.frontier:
        state.begin_iteration()
        frontier = state.frontier
        for u in up_order:
            if u in frontier or changed_now[u]:
                for v, w in up_adj[u]:
                    relax(u, v, w)
        for u in down_order:
            if u in frontier or changed_now[u]:
                for v, w in down_adj[u]:
                    relax(u, v, w)
        state.end_iteration()
        yield state


def _drain_capped(g: Graph, state: SsspState, iterator: Iterator[SsspState],
                  engine: str) -> None:
    # Cap outer iterations at n + 1: hitting it means a negative cycle leaked
    # past the caller's preconditions.
    cap = g.n + 1
    for st in iterator:
        if st.iterations >= cap and st.frontier:
            warnings.warn(
                f"{engine}: iteration cap {cap} hit with work remaining; "
                "the input likely has a negative cycle reachable from the source",
                RuntimeWarning,
                stacklevel=3,
            )
            break


def run_basic(g: Graph, strict: bool = False) -> tuple[SsspState, RunStats]:
    """Fixed n-1 passes over all m edges.

    With ``strict=True`` every edge visit counts as a relax call even when the
    tail is unreached, reproducing the exact m*(n-1) figure.  Distances are
    exact when no negative cycle is reachable from the source.
    """
    state = SsspState(g)
    for _ in basic_passes(g, strict, state):
        pass
    return state, _stats(state, terminated_early=False)


def run_adaptive(g: Graph) -> tuple[SsspState, RunStats]:
    """Changed-vertices-only passes with early termination."""
    state = SsspState(g)
    _drain_capped(g, state, adaptive_iterations(g, state), "run_adaptive")
    return state, _stats(state, terminated_early=not state.frontier)


def run_yen(g: Graph, ordering: Ordering) -> tuple[SsspState, RunStats]:
    """Two acyclic-subgraph passes per iteration under a fixed ordering.

    Performs at most m*n/2 + m relax calls on negative-cycle-free inputs.
    """
    state = SsspState(g)
    _drain_capped(g, state, yen_iterations(g, ordering, state), "run_yen")
    return state, _stats(state, terminated_early=not state.frontier)


def run_randomized(g: Graph, seed: int) -> tuple[SsspState, RunStats, Ordering]:
    """``run_yen`` under a seeded uniform random ordering.

    Returns the ordering used so callers can audit the run.  Final distances
    are seed-independent; only the iteration and relaxation counts vary.
    """
    ordering = random_ordering(g, seed)
    state, stats = run_yen(g, ordering)
    return state, stats, ordering

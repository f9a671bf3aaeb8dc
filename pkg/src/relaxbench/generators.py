"""Deterministic and seeded-random graph instance generators.

Includes the single-path family on which the randomized ordering analysis is
tight, the rank pattern that forces the partitioned engine into its slowest
alternating behaviour, random sparse/dense instances, and planted negative
cycles that give detection tests their ground truth.  All randomness flows
through ``random.Random(seed)``, so equal specs yield identical graphs.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, fields
from typing import Optional

from .graph import Edge, Graph, Ordering

KINDS = ("path-worst-case", "random-sparse", "random-dense", "planted-cycle",
         "alternating-adversary")


def worst_case_path(n: int) -> Graph:
    """The n-vertex path 0 -> 1 -> ... -> n-1, unit weights, source 0.

    Its shortest-path tree is the unique (n-1)-edge path, the configuration
    that maximizes the expected iteration count of the randomized engine.
    """
    if n < 2:
        raise ValueError(f"path needs n >= 2, got {n}")
    return Graph(n, tuple((i, i + 1, 1.0) for i in range(n - 1)), source=0)


def adversarial_ordering(n: int) -> Ordering:
    """The rank pattern that makes every other path vertex a local minimum.

    Intended for ``worst_case_path(n)``: position 0 keeps rank 0, odd path
    positions take the highest ranks in descending order, and even positions
    from 2 on take ranks 1, 2, ... ascending.  Consecutive path edges then
    alternate between the ascending and descending subgraphs maximally, which
    drives the fixed-ordering engine to about n/2 iterations.
    """
    if n < 2:
        raise ValueError(f"ordering needs n >= 2, got {n}")
    rank = [0] * n
    for i in range(1, n, 2):
        rank[i] = n - 1 - (i - 1) // 2
    for i in range(2, n, 2):
        rank[i] = i // 2
    return Ordering(tuple(rank))


@dataclass(frozen=True)
class GeneratorSpec:
    """Parameters for one generated instance.

    ``m`` and ``density`` are alternatives (density means m/(n*(n-1)));
    the dense kind always uses every ordered pair.  ``ensure_reachable`` adds
    a zero-weight spanning arborescence before the random edges, so it needs
    m >= n-1.  Planted cycles are appended after the base edges (parallel
    edges are legal) and are always made reachable from the source.
    """

    kind: str
    n: int
    m: Optional[int] = None
    density: Optional[float] = None
    weight_min: int = -3
    weight_max: int = 7
    seed: int = 0
    ensure_reachable: bool = False
    cycle_length: Optional[int] = None
    cycle_weight: Optional[int] = None

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"unknown generator kind {self.kind!r}")
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if self.weight_min > self.weight_max:
            raise ValueError("weight_min must be <= weight_max")
        if self.kind in ("path-worst-case", "alternating-adversary"):
            if self.n < 2:
                raise ValueError(f"{self.kind} needs n >= 2")
            return
        base = self.base_edge_count()
        if not 0 <= base <= self.n * (self.n - 1):
            raise ValueError(f"edge count {base} outside [0, n*(n-1)]")
        if self.ensure_reachable and base < self.n - 1:
            raise ValueError("ensure_reachable needs at least n-1 edges")
        if self.kind == "planted-cycle":
            if self.cycle_length is None or self.cycle_weight is None:
                raise ValueError("planted-cycle needs cycle_length and cycle_weight")
            if not 1 <= self.cycle_length <= self.n:
                raise ValueError("cycle length must be in [1, n]")
            if self.cycle_weight >= 0:
                raise ValueError("planted cycle weight must be negative")

    def base_edge_count(self) -> int:
        full = self.n * (self.n - 1)
        if self.kind == "random-dense":
            return full
        if self.m is not None:
            return self.m
        if self.density is not None:
            return round(self.density * full)
        raise ValueError(f"{self.kind} needs m or density")

    def label(self) -> str:
        """Canonical one-line provenance string for stats output."""
        parts = []
        for f in fields(self):
            value = getattr(self, f.name)
            if value is not None and value != f.default:
                parts.append(f"{f.name}={value}")
            elif f.name in ("kind", "n", "seed"):
                parts.append(f"{f.name}={value}")
        return "gen:" + ";".join(parts)


def _decode_pair(idx: int, n: int) -> tuple[int, int]:
    # Index the n*(n-1) ordered pairs (u, v), u != v.
    u, r = divmod(idx, n - 1)
    return u, r if r < u else r + 1


def random_graph(spec: GeneratorSpec) -> Graph:
    """Build a seeded random instance; equal specs give identical graphs.

    The base graph is simple (no parallel edges, no self-loops).  With
    ``ensure_reachable`` a random recursive arborescence of zero-weight edges
    comes first.  The planted-cycle kind appends cycle_length extra edges
    whose weights are 1 except for the closing edge, which makes the total
    equal cycle_weight.
    """
    if spec.kind in ("path-worst-case", "alternating-adversary"):
        raise ValueError(f"{spec.kind} is deterministic; use build_graph")
    rng = random.Random(spec.seed)
    n = spec.n
    base_m = spec.base_edge_count()
    full = n * (n - 1)
    reachable = spec.ensure_reachable or spec.kind == "planted-cycle"
    if reachable and n > 1 and base_m < n - 1:
        raise ValueError("reachable instance needs at least n-1 base edges")

    edges: list[Edge] = []
    if base_m == full:
        # Complete base: every ordered pair, lexicographic; trivially reachable.
        for u in range(n):
            for v in range(n):
                if u != v:
                    edges.append((u, v, float(rng.randint(spec.weight_min, spec.weight_max))))
    else:
        if reachable and n > 1:
            attach_order = list(range(1, n))
            rng.shuffle(attach_order)
            connected = [0]
            for v in attach_order:
                parent = connected[rng.randrange(len(connected))]
                edges.append((parent, v, 0.0))
                connected.append(v)
        used = {u * (n - 1) + (v - 1 if v > u else v) for u, v, _ in edges}
        while len(edges) < base_m:
            idx = rng.randrange(full)
            if idx in used:
                continue
            used.add(idx)
            u, v = _decode_pair(idx, n)
            edges.append((u, v, float(rng.randint(spec.weight_min, spec.weight_max))))

    if spec.kind == "planted-cycle":
        length = spec.cycle_length
        cycle_vertices = rng.sample(range(n), length)
        closing = float(spec.cycle_weight - (length - 1))
        for i in range(length):
            a = cycle_vertices[i]
            b = cycle_vertices[(i + 1) % length]
            w = closing if i == length - 1 else 1.0
            edges.append((a, b, w))

    return Graph(n, tuple(edges), source=0)


def build_graph(spec: GeneratorSpec) -> Graph:
    """Dispatch a spec to its generator (the CLI's single entry point)."""
    if spec.kind in ("path-worst-case", "alternating-adversary"):
        return worst_case_path(spec.n)
    return random_graph(spec)


def complete_over_path(n: int, heavy: Optional[float] = None) -> Graph:
    """Complete digraph whose only shortest paths are the unit-weight path.

    Path edges i -> i+1 keep weight 1; every other ordered pair gets a weight
    (default n) too heavy to ever lie on a shortest path, so the shortest-path
    tree is still the single path while the instance is fully dense.
    """
    if n < 2:
        raise ValueError(f"needs n >= 2, got {n}")
    if heavy is None:
        heavy = float(n)
    if heavy <= n - 1:
        raise ValueError("heavy weight must exceed the longest path distance")
    edges = []
    for u in range(n):
        for v in range(n):
            if u == v:
                continue
            w = 1.0 if v == u + 1 else float(heavy)
            edges.append((u, v, w))
    return Graph(n, tuple(edges), source=0)

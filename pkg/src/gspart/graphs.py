"""Core graph/partition types and generators for the benchmark families.

Vertices are always the integers ``0..n-1``.  Graphs are undirected and
simple (no self-loops, no multi-edges) and immutable once built, so they
can be shared freely between benchmark workers.
"""

from __future__ import annotations

import math
import random
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Iterator

__all__ = [
    "Graph",
    "Partition",
    "default_capacities",
    "gen_grid",
    "gen_near_square_grid",
    "gen_random_regular",
    "gen_erdos_renyi",
]


class Graph:
    """Undirected simple graph with stable 0-based vertex indices."""

    __slots__ = ("n", "_neighbors", "_neighbor_sets", "_m")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError(f"vertex count must be non-negative, got {n}")
        adj: list[set[int]] = [set() for _ in range(n)]
        m = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if v in adj[u]:
                raise ValueError(f"duplicate edge ({u}, {v})")
            adj[u].add(v)
            adj[v].add(u)
            m += 1
        self.n = n
        self._m = m
        self._neighbors = tuple(tuple(sorted(s)) for s in adj)
        self._neighbor_sets = tuple(frozenset(s) for s in adj)

    @property
    def m(self) -> int:
        """Number of edges."""
        return self._m

    def neighbors(self, v: int) -> tuple[int, ...]:
        """Neighbors of ``v`` in ascending order."""
        return self._neighbors[v]

    def neighbor_set(self, v: int) -> frozenset[int]:
        return self._neighbor_sets[v]

    def degree(self, v: int) -> int:
        return len(self._neighbors[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._neighbor_sets[u]

    def edges(self) -> Iterator[tuple[int, int]]:
        """All edges as (u, v) with u < v, in ascending order."""
        for u in range(self.n):
            for v in self._neighbors[u]:
                if v > u:
                    yield (u, v)

    def edge_set(self) -> set[tuple[int, int]]:
        return set(self.edges())

    def induced_degree(self, v: int, active: frozenset[int] | set[int]) -> int:
        """Degree of ``v`` within the subgraph induced by ``active``."""
        return len(self._neighbor_sets[v] & active)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._neighbors == other._neighbors

    def __hash__(self) -> int:
        return hash((self.n, self._neighbors))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def default_capacities(n: int, k: int) -> tuple[int, ...]:
    """Near-equal part sizes: ceil(n/k) for the first n % k parts, floor(n/k) after."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    q, rem = divmod(n, k)
    return tuple(q + 1 if i < rem else q for i in range(k))


@dataclass(frozen=True)
class Partition:
    """Assignment of each vertex to one of ``k`` colors, with target part sizes.

    ``capacities`` are the intended sizes; ``counts()`` gives the realized
    ones.  The two agree for every partitioner in this package, but imported
    partitions may be unbalanced.
    """

    colors: tuple[int, ...]
    k: int
    capacities: tuple[int, ...] = field(default=())

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"k must be positive, got {self.k}")
        colors = tuple(self.colors)
        object.__setattr__(self, "colors", colors)
        for i, c in enumerate(colors):
            if not (0 <= c < self.k):
                raise ValueError(f"color {c} of vertex {i} not in 0..{self.k - 1}")
        caps = tuple(self.capacities)
        if not caps:
            counts = [0] * self.k
            for c in colors:
                counts[c] += 1
            caps = tuple(counts)
        if len(caps) != self.k:
            raise ValueError(f"expected {self.k} capacities, got {len(caps)}")
        if sum(caps) != len(colors):
            raise ValueError(
                f"capacities sum to {sum(caps)} but there are {len(colors)} vertices"
            )
        object.__setattr__(self, "capacities", caps)

    @property
    def n(self) -> int:
        return len(self.colors)

    def counts(self) -> tuple[int, ...]:
        counts = [0] * self.k
        for c in self.colors:
            counts[c] += 1
        return tuple(counts)

    def is_balanced(self) -> bool:
        return self.counts() == self.capacities

    def part(self, color: int) -> tuple[int, ...]:
        """Vertices of one color, ascending."""
        return tuple(v for v, c in enumerate(self.colors) if c == color)


def gen_grid(rows: int, cols: int) -> Graph:
    """The rows x cols square lattice; vertex index = r * cols + c."""
    if rows < 1 or cols < 1:
        raise ValueError(f"grid dimensions must be positive, got {rows}x{cols}")
    edges = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                edges.append((v, v + 1))
            if r + 1 < rows:
                edges.append((v, v + cols))
    return Graph(rows * cols, edges)


def gen_near_square_grid(n: int) -> Graph:
    """Grid on n vertices with side lengths as close to equal as possible.

    Ties broken toward rows <= cols; a prime n degenerates to a 1 x n path.
    """
    if n < 1:
        raise ValueError(f"vertex count must be positive, got {n}")
    rows = 1
    for r in range(1, math.isqrt(n) + 1):
        if n % r == 0:
            rows = r
    return gen_grid(rows, n // rows)


def gen_random_regular(n: int, d: int, rng_seed: int | None = None) -> Graph:
    """Random simple d-regular graph via the pairing (configuration) model.

    Collided stubs are re-drawn instead of restarting the whole pairing,
    following the standard repair scheme; a full restart only happens when
    no suitable pairing of the leftover stubs exists.  Deterministic for a
    fixed seed.
    """
    if d < 1 or d >= n:
        raise ValueError(f"degree must satisfy 1 <= d < n, got d={d}, n={n}")
    if (n * d) % 2 != 0:
        raise ValueError(f"n*d must be even, got n={n}, d={d}")
    rng = random.Random(rng_seed)

    def suitable(edges: set[tuple[int, int]], leftover: dict[int, int]) -> bool:
        # A pairing of the leftover stubs exists iff some non-edge remains
        # between leftover endpoints.
        if not leftover:
            return True
        verts = sorted(leftover)
        for i, s1 in enumerate(verts):
            for s2 in verts[i + 1 :]:
                if (s1, s2) not in edges:
                    return True
        return False

    def try_pairing() -> set[tuple[int, int]] | None:
        edges: set[tuple[int, int]] = set()
        stubs = list(range(n)) * d
        while stubs:
            leftover: dict[int, int] = defaultdict(int)
            rng.shuffle(stubs)
            it = iter(stubs)
            for s1, s2 in zip(it, it):
                if s1 > s2:
                    s1, s2 = s2, s1
                if s1 != s2 and (s1, s2) not in edges:
                    edges.add((s1, s2))
                else:
                    leftover[s1] += 1
                    leftover[s2] += 1
            if not suitable(edges, leftover):
                return None
            stubs = [v for v, c in leftover.items() for _ in range(c)]
        return edges

    for _ in range(1000):
        edges = try_pairing()
        if edges is not None:
            return Graph(n, edges)
    raise RuntimeError(f"failed to sample a simple {d}-regular graph on {n} vertices")


def gen_erdos_renyi(n: int, p: float, rng_seed: int | None = None) -> Graph:
    """G(n, p) with each possible edge drawn independently."""
    if n < 0:
        raise ValueError(f"vertex count must be non-negative, got {n}")
    if not (0.0 <= p <= 1.0):
        raise ValueError(f"edge probability must be in [0, 1], got {p}")
    rng = random.Random(rng_seed)
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
    ]
    return Graph(n, edges)

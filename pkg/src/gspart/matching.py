"""Bipartite maximum matching and minimum vertex cover on cross graphs.

The cross graph between two parts keeps exactly the edges with one endpoint
in each part; same-color edges are dropped since they never need the
network.  Hopcroft-Karp gives the maximum matching and the alternating
reachability construction turns it into a minimum vertex cover of the same
size.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from .graphs import Graph, Partition

__all__ = [
    "BipartiteCrossGraph",
    "MatchingResult",
    "cross_graph",
    "hopcroft_karp",
    "brute_force_matching",
]

BRUTE_FORCE_EDGE_LIMIT = 20


@dataclass(frozen=True)
class BipartiteCrossGraph:
    """Cross edges between two parts, as a bipartite graph.

    ``left`` and ``right`` list the vertex ids incident to at least one
    cross edge, ascending.  ``edges`` holds (left-index, right-index) pairs
    into those sequences.
    """

    left: tuple[int, ...]
    right: tuple[int, ...]
    edges: frozenset[tuple[int, int]]

    def left_adjacency(self) -> tuple[tuple[int, ...], ...]:
        """Right-indices adjacent to each left index, ascending."""
        adj: list[list[int]] = [[] for _ in self.left]
        for i, j in sorted(self.edges):
            adj[i].append(j)
        return tuple(tuple(x) for x in adj)

    def edge_ids(self) -> set[tuple[int, int]]:
        """Edges as (left vertex id, right vertex id) pairs."""
        return {(self.left[i], self.right[j]) for i, j in self.edges}


def cross_graph(g: Graph, p: Partition, a: int, b: int) -> BipartiteCrossGraph:
    """Bipartite graph of exactly the a<->b cross edges of (g, p)."""
    if len(p.colors) != g.n:
        raise ValueError(f"partition covers {len(p.colors)} vertices, graph has {g.n}")
    if a == b or not (0 <= a < p.k) or not (0 <= b < p.k):
        raise ValueError(f"colors must be distinct and < {p.k}, got ({a}, {b})")
    id_edges = []
    for u, v in g.edges():
        cu, cv = p.colors[u], p.colors[v]
        if cu == a and cv == b:
            id_edges.append((u, v))
        elif cu == b and cv == a:
            id_edges.append((v, u))
    left = tuple(sorted({u for u, _ in id_edges}))
    right = tuple(sorted({v for _, v in id_edges}))
    li = {u: i for i, u in enumerate(left)}
    ri = {v: j for j, v in enumerate(right)}
    return BipartiteCrossGraph(
        left, right, frozenset((li[u], ri[v]) for u, v in id_edges)
    )


@dataclass(frozen=True)
class MatchingResult:
    """A maximum matching plus a Konig minimum vertex cover of equal size.

    Pairs and cover entries are vertex ids (not indices).
    """

    matching: frozenset[tuple[int, int]]
    cover: frozenset[int]

    @property
    def size(self) -> int:
        return len(self.matching)


def hopcroft_karp(bg: BipartiteCrossGraph) -> MatchingResult:
    """Maximum matching by Hopcroft-Karp, with the Konig cover.

    Deterministic: left vertices are processed in ascending index order and
    adjacency is sorted, so identical inputs give identical matchings.
    """
    nl, nr = len(bg.left), len(bg.right)
    adj = bg.left_adjacency()
    match_l = [-1] * nl
    match_r = [-1] * nr
    dist = [math.inf] * nl

    def bfs() -> bool:
        queue: deque[int] = deque()
        for u in range(nl):
            if match_l[u] == -1:
                dist[u] = 0
                queue.append(u)
            else:
                dist[u] = math.inf
        found = math.inf
        while queue:
            u = queue.popleft()
            if dist[u] < found:
                for j in adj[u]:
                    w = match_r[j]
                    if w == -1:
                        found = min(found, dist[u] + 1)
                    elif dist[w] == math.inf:
                        dist[w] = dist[u] + 1
                        queue.append(w)
        return found != math.inf

    def dfs(root: int) -> bool:
        # Iterative DFS along the level graph; augmenting paths can be long
        # on large instances, so recursion is avoided.
        stack: list[tuple[int, int]] = [(root, 0)]
        picked: list[int] = []
        while stack:
            u, pos = stack[-1]
            advanced = False
            neighbors = adj[u]
            while pos < len(neighbors):
                j = neighbors[pos]
                pos += 1
                w = match_r[j]
                if w == -1:
                    picked.append(j)
                    for (uu, _), jj in zip(stack, picked):
                        match_l[uu] = jj
                        match_r[jj] = uu
                    return True
                if dist[w] == dist[u] + 1:
                    stack[-1] = (u, pos)
                    stack.append((w, 0))
                    picked.append(j)
                    advanced = True
                    break
            if not advanced:
                dist[u] = math.inf
                stack.pop()
                if picked:
                    picked.pop()
        return False

    while bfs():
        for u in range(nl):
            if match_l[u] == -1:
                dfs(u)

    # Konig: Z = vertices reachable by alternating paths from unmatched left
    # vertices (non-matching edges left->right, matching edges right->left).
    # The cover is (left \ Z) union (right in Z).
    z_left = [match_l[u] == -1 for u in range(nl)]
    z_right = [False] * nr
    queue = deque(u for u in range(nl) if z_left[u])
    while queue:
        u = queue.popleft()
        for j in adj[u]:
            if match_l[u] == j:
                continue
            if not z_right[j]:
                z_right[j] = True
                w = match_r[j]
                if w != -1 and not z_left[w]:
                    z_left[w] = True
                    queue.append(w)

    matching = frozenset(
        (bg.left[u], bg.right[j]) for u, j in enumerate(match_l) if j != -1
    )
    cover = frozenset(
        [bg.left[u] for u in range(nl) if not z_left[u]]
        + [bg.right[j] for j in range(nr) if z_right[j]]
    )
    return MatchingResult(matching, cover)


def brute_force_matching(bg: BipartiteCrossGraph) -> int:
    """Exact maximum matching size by exhaustive search over edge subsets.

    Test oracle for small instances only; independent of hopcroft_karp.
    """
    edges = sorted(bg.edges)
    if len(edges) > BRUTE_FORCE_EDGE_LIMIT:
        raise ValueError(
            f"brute-force oracle limited to {BRUTE_FORCE_EDGE_LIMIT} edges, "
            f"got {len(edges)}"
        )
    nl = len(bg.left)

    @lru_cache(maxsize=None)
    def best(idx: int, used: int) -> int:
        if idx == len(edges):
            return 0
        i, j = edges[idx]
        result = best(idx + 1, used)
        mask = (1 << i) | (1 << (nl + j))
        if not used & mask:
            result = max(result, 1 + best(idx + 1, used | mask))
        return result

    return best(0, 0)

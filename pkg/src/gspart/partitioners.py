"""Partitioning algorithms: the bury heuristic, Kernighan-Lin, random
sampling, and an exhaustive oracle for small instances.

Burying a vertex means giving it and its whole neighborhood one color, so
it can never sit on a cross edge and never joins a cross matching.  The
bury heuristic greedily buries the cheapest vertex until the color's
capacity is spent, where a vertex's cost (its "weight") is the number of
still-uncolored vertices in its closed neighborhood.  Already-colored but
unburied vertices stay candidates: burying one extends the colored region
by its remaining uncolored neighbors.

All partitioners are deterministic given their inputs and seed; argmin
ties always resolve to the lowest vertex index.
"""

from __future__ import annotations

import heapq
import math
import random
from typing import Callable, Iterable, Sequence

from .graphs import Graph, Partition, default_capacities
from .metrics import resolve_objective

__all__ = [
    "BuryState",
    "bury_bipartition",
    "bury_seeding",
    "bury_kpartition",
    "kernighan_lin",
    "random_sampling",
    "exhaustive_optimum",
]


class BuryState:
    """Working state of one bury run over (a subgraph of) a graph.

    Weights are maintained incrementally: coloring a vertex decrements its
    own weight and each active neighbor's.  Buried vertices have weight
    infinity.  When ``frontier_only`` is set, burial candidates are
    restricted to vertices that are colored or adjacent to a colored vertex
    (the seeded-growth variant).
    """

    def __init__(
        self,
        g: Graph,
        r0: int,
        *,
        active: Iterable[int] | None = None,
        precolored: Iterable[int] = (),
        frontier_only: bool = False,
    ):
        self.g = g
        self.active = frozenset(range(g.n) if active is None else active)
        for v in self.active:
            if not (0 <= v < g.n):
                raise ValueError(f"active vertex {v} out of range")
        pre = frozenset(precolored)
        if not pre <= self.active:
            raise ValueError("precolored vertices must be active")
        if not (0 <= r0 <= len(self.active) - len(pre)):
            raise ValueError(
                f"resource {r0} out of range 0..{len(self.active) - len(pre)}"
            )
        self.r = r0
        self.frontier_only = frontier_only
        self._colored = [False] * g.n
        self._buried = [False] * g.n
        self._frontier = [False] * g.n
        self._weight = [0] * g.n
        for v in self.active:
            self._weight[v] = g.induced_degree(v, self.active) + 1
        self._bury_heap: list[tuple[int, int]] = []
        self._fill_frontier_heap: list[tuple[int, int]] = []
        self._fill_global_heap: list[tuple[int, int]] = []
        for v in sorted(self.active):
            self._push_bury(v)
            heapq.heappush(self._fill_global_heap, (self._weight[v], v))
        for v in sorted(pre):
            self._color(v)

    # -- candidate bookkeeping ------------------------------------------------

    def _bury_eligible(self, v: int) -> bool:
        if self._buried[v] or v not in self.active:
            return False
        if self.frontier_only:
            return self._colored[v] or self._frontier[v]
        return True

    def _push_bury(self, v: int) -> None:
        if self._bury_eligible(v):
            heapq.heappush(self._bury_heap, (self._weight[v], v))

    def _color(self, u: int) -> None:
        """Mark ``u`` colored and propagate weight decrements.  No resource use."""
        self._colored[u] = True
        self._weight[u] -= 1
        self._push_bury(u)
        for w in self.g.neighbors(u):
            if w not in self.active:
                continue
            self._weight[w] -= 1
            if not self._frontier[w]:
                self._frontier[w] = True
            self._push_bury(w)
            if not self._colored[w]:
                heapq.heappush(self._fill_frontier_heap, (self._weight[w], w))
                heapq.heappush(self._fill_global_heap, (self._weight[w], w))

    def _peek_bury(self) -> tuple[int, int] | None:
        """Cheapest burial candidate as (weight, vertex), or None."""
        heap = self._bury_heap
        while heap:
            w, v = heap[0]
            if self._bury_eligible(v) and self._weight[v] == w:
                return (w, v)
            heapq.heappop(heap)
        return None

    def _peek_fill(self) -> int | None:
        """Next single vertex to color: cheapest frontier vertex, falling
        back to the cheapest uncolored vertex anywhere."""
        for heap in (self._fill_frontier_heap, self._fill_global_heap):
            while heap:
                w, v = heap[0]
                if (
                    not self._colored[v]
                    and v in self.active
                    and self._weight[v] == w
                    and (heap is self._fill_global_heap or self._frontier[v])
                ):
                    return v
                heapq.heappop(heap)
        return None

    # -- public surface --------------------------------------------------------

    def weight(self, v: int) -> float:
        """Current bury cost of ``v``; infinity once buried."""
        if v not in self.active:
            raise ValueError(f"vertex {v} is not active")
        return math.inf if self._buried[v] else self._weight[v]

    def is_colored(self, v: int) -> bool:
        return self._colored[v]

    def is_buried(self, v: int) -> bool:
        return self._buried[v]

    def colored_vertices(self) -> set[int]:
        return {v for v in self.active if self._colored[v]}

    def bury(self, v: int) -> None:
        """Color all of N[v], paying v's weight from the remaining resource."""
        if v not in self.active or self._buried[v]:
            raise ValueError(f"vertex {v} cannot be buried")
        cost = self._weight[v]
        if cost > self.r:
            raise ValueError(f"burying {v} costs {cost} but only {self.r} remains")
        self.r -= cost
        if not self._colored[v]:
            self._color(v)
        for u in self.g.neighbors(v):
            if u in self.active and not self._colored[u]:
                self._color(u)
        self._buried[v] = True

    def color_single(self, v: int) -> None:
        """Color one vertex for one unit of resource."""
        if v not in self.active or self._colored[v]:
            raise ValueError(f"vertex {v} cannot be colored")
        if self.r < 1:
            raise ValueError("no resource left")
        self.r -= 1
        self._color(v)

    def run(self) -> "BuryState":
        """Main loop: bury the cheapest affordable candidate; when nothing is
        affordable, color single vertices (frontier first) until the
        resource is spent.  Zero-cost burials are performed eagerly but
        never change the colored set."""
        while True:
            top = self._peek_bury()
            if top is not None:
                w, v = top
                if w <= self.r and (self.r > 0 or w == 0):
                    self.bury(v)
                    continue
            if self.r > 0:
                u = self._peek_fill()
                if u is None:
                    raise RuntimeError("resource left but no uncolored vertex")
                self.color_single(u)
                continue
            break
        return self

    def recount_weights(self) -> dict[int, float]:
        """From-scratch weights, for checking the incremental bookkeeping."""
        out: dict[int, float] = {}
        for v in self.active:
            if self._buried[v]:
                out[v] = math.inf
            else:
                closed = [v, *self.g.neighbors(v)]
                out[v] = sum(
                    1 for u in closed if u in self.active and not self._colored[u]
                )
        return out


def bury_bipartition(
    g: Graph,
    r0: int,
    rng_seed: int | None = None,
    precolored: Iterable[int] | None = None,
) -> set[int]:
    """Color exactly r0 vertices (beyond any precolored ones) so that the
    matching between colored and uncolored sides is small.

    The heuristic itself is deterministic (lowest-index tie-breaking);
    ``rng_seed`` is accepted so all partitioners share a call shape.
    """
    del rng_seed
    state = BuryState(g, r0, precolored=precolored or ())
    state.run()
    return state.colored_vertices()


def bury_seeding(
    g: Graph, r0: int, seed_vertex: int, rng_seed: int | None = None
) -> set[int]:
    """Seeded bury variant: the seed is colored first (using one unit of
    resource) and burial candidates are restricted to the frontier, so the
    colored region grows connected from the seed."""
    del rng_seed
    if not (0 <= seed_vertex < g.n):
        raise ValueError(f"seed vertex {seed_vertex} out of range")
    if r0 < 1:
        raise ValueError(f"seeded run needs r0 >= 1, got {r0}")
    state = BuryState(g, r0, frontier_only=True)
    state.color_single(seed_vertex)
    state.run()
    return state.colored_vertices()


def bury_kpartition(
    g: Graph,
    capacities: Sequence[int],
    rng_seed: int | None = None,
    seed_vertex: int | None = None,
) -> Partition:
    """k-way partition by repeated bury runs on the shrinking uncolored
    subgraph; color i gets exactly capacities[i] vertices and the last color
    receives the residue.  Heterogeneous capacities are supported.  With
    ``seed_vertex`` the first round runs the seeded frontier variant."""
    caps = tuple(capacities)
    k = len(caps)
    if k < 1:
        raise ValueError("at least one part required")
    if any(c < 0 for c in caps):
        raise ValueError(f"negative capacity in {caps}")
    if sum(caps) != g.n:
        raise ValueError(f"capacities sum to {sum(caps)}, graph has {g.n} vertices")
    colors = [k - 1] * g.n
    active = set(range(g.n))
    for i in range(k - 1):
        seeded = seed_vertex is not None and i == 0 and caps[i] >= 1
        state = BuryState(g, caps[i], active=active, frontier_only=seeded)
        if seeded:
            if seed_vertex not in active:
                raise ValueError(f"seed vertex {seed_vertex} out of range")
            state.color_single(seed_vertex)
        state.run()
        newly = state.colored_vertices()
        for v in newly:
            colors[v] = i
        active -= newly
    return Partition(tuple(colors), k, caps)


def _kl_pass(
    g: Graph, side_a: set[int], side_b: set[int], active: frozenset[int]
) -> int:
    """One Kernighan-Lin pass over an A/B split of ``active``; commits the
    best prefix of tentative swaps and returns the cut improvement."""
    d: dict[int, int] = {}
    for v in active:
        same = side_a if v in side_a else side_b
        score = 0
        for u in g.neighbors(v):
            if u in active:
                score += -1 if u in same else 1
        d[v] = score
    unlocked_a = set(side_a)
    unlocked_b = set(side_b)
    swaps: list[tuple[int, int, int]] = []
    for _ in range(min(len(side_a), len(side_b))):
        order_a = sorted(unlocked_a, key=lambda v: (-d[v], v))
        order_b = sorted(unlocked_b, key=lambda v: (-d[v], v))
        best: tuple[int, int] | None = None
        best_gain = 0
        max_d_b = d[order_b[0]]
        for u in order_a:
            if best is not None and d[u] + max_d_b <= best_gain:
                break
            nbrs = g.neighbor_set(u)
            for v in order_b:
                bound = d[u] + d[v]
                if best is not None and bound <= best_gain:
                    break
                gain = bound - (2 if v in nbrs else 0)
                if best is None or gain > best_gain:
                    best, best_gain = (u, v), gain
        if best is None:
            break
        u, v = best
        swaps.append((best_gain, u, v))
        unlocked_a.discard(u)
        unlocked_b.discard(v)
        for w in g.neighbors(u):
            if w in unlocked_a:
                d[w] += 2
            elif w in unlocked_b:
                d[w] -= 2
        for w in g.neighbors(v):
            if w in unlocked_a:
                d[w] -= 2
            elif w in unlocked_b:
                d[w] += 2
    total = 0
    best_total = 0
    best_len = 0
    for i, (gain, _, _) in enumerate(swaps, start=1):
        total += gain
        if total > best_total:
            best_total, best_len = total, i
    for _, u, v in swaps[:best_len]:
        side_a.discard(u)
        side_a.add(v)
        side_b.discard(v)
        side_b.add(u)
    return best_total


def _kl_split(
    g: Graph,
    vertices: list[int],
    color_group: list[int],
    caps: tuple[int, ...],
    colors: list[int],
    rng: random.Random,
    max_passes: int,
) -> None:
    if len(color_group) == 1:
        for v in vertices:
            colors[v] = color_group[0]
        return
    mid = len(color_group) // 2
    group_a, group_b = color_group[:mid], color_group[mid:]
    size_a = sum(caps[c] for c in group_a)
    shuffled = list(vertices)
    rng.shuffle(shuffled)
    side_a = set(shuffled[:size_a])
    side_b = set(shuffled[size_a:])
    active = frozenset(vertices)
    for _ in range(max_passes):
        if _kl_pass(g, side_a, side_b, active) <= 0:
            break
    _kl_split(g, sorted(side_a), group_a, caps, colors, rng, max_passes)
    _kl_split(g, sorted(side_b), group_b, caps, colors, rng, max_passes)


def kernighan_lin(
    g: Graph, k: int = 2, rng_seed: int | None = None, max_passes: int = 10
) -> Partition:
    """Balanced k-partition minimizing edge cut by Kernighan-Lin swap passes
    (gain tables, tentative swaps, best-prefix rollback), applied by
    recursive near-bisection for k > 2.  Starts from a seeded random split."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    if max_passes < 1:
        raise ValueError(f"max_passes must be positive, got {max_passes}")
    caps = default_capacities(g.n, k)
    rng = random.Random(rng_seed)
    colors = [0] * g.n
    _kl_split(g, list(range(g.n)), list(range(k)), caps, colors, rng, max_passes)
    return Partition(tuple(colors), k, caps)


def _random_balanced_colors(
    n: int, caps: tuple[int, ...], rng: random.Random
) -> tuple[int, ...]:
    verts = list(range(n))
    rng.shuffle(verts)
    colors = [0] * n
    pos = 0
    for color, cap in enumerate(caps):
        for v in verts[pos : pos + cap]:
            colors[v] = color
        pos += cap
    return tuple(colors)


def random_sampling(
    g: Graph,
    k: int,
    trials: int,
    rng_seed: int | None = None,
    objective: str | Callable[[Graph, Partition], int] = "matching",
) -> Partition:
    """Best of ``trials`` uniformly random balanced partitions under the
    selected objective (ties keep the earliest)."""
    if trials < 1:
        raise ValueError(f"trials must be positive, got {trials}")
    obj = resolve_objective(objective)
    caps = default_capacities(g.n, k)
    rng = random.Random(rng_seed)
    best: Partition | None = None
    best_value: int | None = None
    for _ in range(trials):
        p = Partition(_random_balanced_colors(g.n, caps, rng), k, caps)
        value = obj(g, p)
        if best_value is None or value < best_value:
            best, best_value = p, value
    assert best is not None
    return best


def _count_balanced_colorings(n: int, caps: tuple[int, ...]) -> int:
    total = math.factorial(n)
    for c in caps:
        total //= math.factorial(c)
    sym = 1
    run = 1
    for i in range(1, len(caps) + 1):
        if i < len(caps) and caps[i] == caps[i - 1]:
            run += 1
        else:
            sym *= math.factorial(run)
            run = 1
    return total // sym


EXHAUSTIVE_LIMIT = 10_000_000


def exhaustive_optimum(
    g: Graph,
    k: int,
    objective: str | Callable[[Graph, Partition], int] = "matching",
) -> tuple[Partition, int]:
    """True optimum over all balanced colorings, enumerated up to
    permutations of equal-capacity colors.  Refuses instances with more
    than ten million canonical colorings."""
    if not (1 <= k <= g.n):
        raise ValueError(f"k must be in 1..{g.n}, got {k}")
    obj = resolve_objective(objective)
    caps = default_capacities(g.n, k)
    count = _count_balanced_colorings(g.n, caps)
    if count > EXHAUSTIVE_LIMIT:
        raise ValueError(
            f"{count} balanced colorings exceed the oracle limit {EXHAUSTIVE_LIMIT}"
        )
    n = g.n
    # Colors sharing a capacity are interchangeable; force their first
    # occurrences into ascending color order to enumerate one per orbit.
    prev_same = [
        i - 1 if i > 0 and caps[i - 1] == caps[i] else None for i in range(k)
    ]
    colors = [0] * n
    remaining = list(caps)
    used = [False] * k
    best: Partition | None = None
    best_value: int | None = None

    def descend(v: int) -> None:
        nonlocal best, best_value
        if v == n:
            p = Partition(tuple(colors), k, caps)
            value = obj(g, p)
            if best_value is None or value < best_value:
                best, best_value = p, value
            return
        for j in range(k):
            if remaining[j] == 0:
                continue
            if not used[j]:
                ps = prev_same[j]
                if ps is not None and not used[ps]:
                    continue
            was_used = used[j]
            used[j] = True
            remaining[j] -= 1
            colors[v] = j
            descend(v + 1)
            used[j] = was_used
            remaining[j] += 1

    descend(0)
    assert best is not None and best_value is not None
    return best, best_value

"""Vertex cover grafting: generate all cross-partition edges of a graph
state one part-pair at a time, spending one Bell pair per cover vertex.

For each pair of parts with cross edges, the minimum vertex cover of the
bipartite cross graph is computed; each cover vertex then receives all of
its missing cross edges at once through a star graft (two helper qubits
opened as a Bell pair, CZ-coupled, then Y-measured away).  Same-part edges
are applied by plain local CZs at the end.  The executor records every
event so a run can be replayed and audited.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .graphs import Graph, Partition
from .graphstate import GraphState
from .matching import cross_graph, hopcroft_karp

__all__ = [
    "VcgTrace",
    "bell_pair",
    "graft_star",
    "run_vcg",
    "parse_trace",
    "replay_trace",
]

# Trace ops: ("pair", a, b) | ("bell", qa, qb) | ("cz", u, v) | ("y", q)


@dataclass
class VcgTrace:
    """Event log of one protocol run plus per-pair Bell accounting."""

    ops: list[tuple] = field(default_factory=list)
    per_pair_bells: dict[tuple[int, int], int] = field(default_factory=dict)

    @property
    def bell_pairs_used(self) -> int:
        return sum(self.per_pair_bells.values())

    def format_text(self) -> str:
        """One line per event: PAIR a b / BELL qa qb / CZ u v / Y q."""
        lines = []
        for op in self.ops:
            kind, *args = op
            lines.append(" ".join([kind.upper(), *map(str, args)]))
        return "\n".join(lines) + ("\n" if lines else "")


def bell_pair(
    state: GraphState, trace: VcgTrace, pair: tuple[int, int]
) -> tuple[int, int]:
    """Open one Bell pair: two fresh qubits joined by an edge, attributed to
    the given part pair.

    A Bell state differs from this two-vertex graph state only by free local
    unitaries, which is all the edge-level simulator needs.
    """
    qa = state.add_plus_qubit()
    qb = state.add_plus_qubit()
    state.apply_cz(qa, qb)
    trace.ops.append(("bell", qa, qb))
    key = (min(pair), max(pair))
    trace.per_pair_bells[key] = trace.per_pair_bells.get(key, 0) + 1
    return qa, qb


def graft_star(
    state: GraphState,
    trace: VcgTrace,
    v: int,
    remote_neighbors: Iterable[int],
    pair: tuple[int, int],
) -> None:
    """Create the edges v--n for every n in remote_neighbors with one Bell pair.

    The two helper qubits are CZ-coupled to v and to the remote side, then
    Y-measured out.  Preexisting edges among the remote neighbors are
    complemented twice (once per Y measurement) and therefore survive, as do
    all edges leaving the grafted set.
    """
    targets = sorted(set(remote_neighbors))
    if not targets:
        raise ValueError("graft requires at least one remote neighbor")
    if v in targets:
        raise ValueError(f"vertex {v} cannot be its own remote neighbor")
    for n in targets:
        if state.has_edge(v, n):
            raise ValueError(f"edge ({v}, {n}) already present before graft")
    mv, mn = bell_pair(state, trace, pair)
    state.apply_cz(v, mv)
    trace.ops.append(("cz", v, mv))
    for n in targets:
        state.apply_cz(n, mn)
        trace.ops.append(("cz", n, mn))
    state.measure_y(mn)
    trace.ops.append(("y", mn))
    state.measure_y(mv)
    trace.ops.append(("y", mv))


def run_vcg(g: Graph, p: Partition) -> tuple[GraphState, VcgTrace]:
    """Generate |g> on parts given by ``p``, returning the final state and trace.

    Cross edges are grafted pair-of-parts at a time at the Konig cover
    vertices (ascending id); a cover vertex whose cross edges were all
    created from the other side is skipped without spending a Bell pair.
    Same-part edges are applied by local CZs after all grafting.  On success
    the final state equals ``g`` exactly and the Bell count equals the sum
    of pairwise maximum matchings; callers verify via
    ``state.matches_graph(g)``.
    """
    if len(p.colors) != g.n:
        raise ValueError(f"partition covers {len(p.colors)} vertices, graph has {g.n}")
    state = GraphState(range(g.n))
    trace = VcgTrace()
    for a in range(p.k):
        for b in range(a + 1, p.k):
            bg = cross_graph(g, p, a, b)
            if not bg.edges:
                continue
            trace.ops.append(("pair", a, b))
            result = hopcroft_karp(bg)
            adjacency: dict[int, list[int]] = defaultdict(list)
            for u, w in sorted(bg.edge_ids()):
                adjacency[u].append(w)
                adjacency[w].append(u)
            created: set[tuple[int, int]] = set()
            for v in sorted(result.cover):
                targets = [
                    u
                    for u in adjacency[v]
                    if (min(u, v), max(u, v)) not in created
                ]
                if not targets:
                    continue
                graft_star(state, trace, v, targets, (a, b))
                created.update((min(u, v), max(u, v)) for u in targets)
    for u, v in g.edges():
        if p.colors[u] == p.colors[v]:
            state.apply_cz(u, v)
            trace.ops.append(("cz", u, v))
    return state, trace


def parse_trace(text: str) -> list[tuple]:
    """Inverse of VcgTrace.format_text."""
    arity = {"pair": 2, "bell": 2, "cz": 2, "y": 1}
    ops: list[tuple] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        parts = line.split()
        kind = parts[0].lower()
        if kind not in arity or len(parts) != arity[kind] + 1:
            raise ValueError(f"line {lineno}: bad trace event {line!r}")
        ops.append((kind, *map(int, parts[1:])))
    return ops


def replay_trace(n: int, ops: Sequence[tuple]) -> GraphState:
    """Re-execute a trace against a fresh state of n isolated qubits."""
    state = GraphState(range(n))
    for op in ops:
        kind, *args = op
        if kind == "pair":
            continue
        if kind == "bell":
            qa, qb = args
            state.add_plus_qubit(qa)
            state.add_plus_qubit(qb)
            state.apply_cz(qa, qb)
        elif kind == "cz":
            state.apply_cz(*args)
        elif kind == "y":
            state.measure_y(args[0])
        else:
            raise ValueError(f"unknown trace op {kind!r}")
    return state

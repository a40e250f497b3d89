"""Classical simulator of graph-state edge dynamics.

Tracks only the edge structure of the state, which is what local
complementation, Y/Z measurement, and CZ act on.  Phases and measurement
byproducts are absorbed into free local corrections, so they are
deliberately not modeled; every property this package verifies is about
edge structure up to local unitaries.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable

from .graphs import Graph

__all__ = ["GraphState"]


class GraphState:
    """Mutable adjacency structure over live qubit ids.

    Measured qubits are removed and their ids never reused; fresh helper
    qubits get ids above everything seen so far.
    """

    def __init__(self, qubits: Iterable[int] = ()):
        self._adj: dict[int, set[int]] = {q: set() for q in qubits}
        self._next_id = max(self._adj, default=-1) + 1

    @classmethod
    def from_graph(cls, g: Graph) -> "GraphState":
        state = cls(range(g.n))
        for u, v in g.edges():
            state._adj[u].add(v)
            state._adj[v].add(u)
        return state

    def _require(self, q: int) -> None:
        if q not in self._adj:
            raise ValueError(f"qubit {q} is not live")

    @property
    def qubits(self) -> frozenset[int]:
        return frozenset(self._adj)

    def has(self, q: int) -> bool:
        return q in self._adj

    def neighbors(self, q: int) -> tuple[int, ...]:
        self._require(q)
        return tuple(sorted(self._adj[q]))

    def degree(self, q: int) -> int:
        self._require(q)
        return len(self._adj[q])

    def has_edge(self, a: int, b: int) -> bool:
        self._require(a)
        self._require(b)
        return b in self._adj[a]

    def edge_set(self) -> set[tuple[int, int]]:
        return {
            (a, b) for a, nbrs in self._adj.items() for b in nbrs if a < b
        }

    def add_plus_qubit(self, qid: int | None = None) -> int:
        """Add a fresh isolated qubit and return its id."""
        if qid is None:
            qid = self._next_id
        elif qid in self._adj:
            raise ValueError(f"qubit {qid} already exists")
        self._adj[qid] = set()
        self._next_id = max(self._next_id, qid + 1)
        return qid

    def apply_cz(self, a: int, b: int) -> None:
        """Toggle the edge between two live qubits."""
        if a == b:
            raise ValueError(f"cz endpoints must differ, got {a} twice")
        self._require(a)
        self._require(b)
        if b in self._adj[a]:
            self._adj[a].discard(b)
            self._adj[b].discard(a)
        else:
            self._adj[a].add(b)
            self._adj[b].add(a)

    def local_complement(self, a: int) -> None:
        """Toggle every edge inside the exclusive neighborhood of ``a``."""
        self._require(a)
        nbrs = sorted(self._adj[a])
        for u, v in combinations(nbrs, 2):
            if v in self._adj[u]:
                self._adj[u].discard(v)
                self._adj[v].discard(u)
            else:
                self._adj[u].add(v)
                self._adj[v].add(u)

    def measure_z(self, a: int) -> None:
        """Remove ``a`` and all incident edges."""
        self._require(a)
        for u in self._adj.pop(a):
            self._adj[u].discard(a)

    def measure_y(self, a: int) -> None:
        """Local complementation at ``a`` followed by its removal."""
        self.local_complement(a)
        self.measure_z(a)

    def matches_graph(self, g: Graph) -> bool:
        """True iff live qubits are exactly 0..n-1 with g's edges."""
        return self.qubits == frozenset(range(g.n)) and self.edge_set() == g.edge_set()

    def copy(self) -> "GraphState":
        dup = GraphState()
        dup._adj = {q: set(nbrs) for q, nbrs in self._adj.items()}
        dup._next_id = self._next_id
        return dup

    def __repr__(self) -> str:
        return f"GraphState(qubits={len(self._adj)}, edges={len(self.edge_set())})"

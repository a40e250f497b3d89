"""Partitioning onto QPUs that are not the same size.

Two situations come up in practice: QPUs with different capacities, and a
computation already in flight, where some qubits are pinned to their QPU
and only the remaining capacity is up for grabs.  The bury machinery
handles both: pass per-part capacities, or precolor the pinned vertices so
a run starts mid-execution.
"""

from gspart import Partition, bury_bipartition, bury_kpartition, evaluate, gen_grid

g = gen_grid(6, 6)

# --- three QPUs with capacities 18 / 12 / 6 -----------------------------------

caps = (18, 12, 6)
p = bury_kpartition(g, caps)
print(f"capacities {caps} -> counts {p.counts()}")
print("matching sum:", evaluate(g, p).matching_sum, "\n")

# --- warm start: one QPU already holds the top row ------------------------------

pinned = set(range(6))  # top row is already placed
extra = 8               # that QPU still has room for 8 more
colored = bury_bipartition(g, extra, precolored=pinned)
print(f"pinned {sorted(pinned)} plus {extra} more -> {len(colored)} on the first QPU")

colors = tuple(0 if v in colored else 1 for v in range(g.n))
p2 = Partition(colors, 2)
print("resulting split:", p2.counts())
print("matching sum:", evaluate(g, p2).matching_sum)
for r in range(6):
    print("  " + " ".join(str(p2.colors[r * 6 + c]) for c in range(6)))

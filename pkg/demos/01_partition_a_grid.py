"""Partition a 6x6 grid three ways and compare the damage.

The interesting number is the matching sum: it is exactly how many Bell
pairs the grafting protocol needs to build the state across QPUs, and it
can be much smaller than the raw count of cut edges.
"""

from gspart import (
    bury_kpartition,
    default_capacities,
    evaluate,
    gen_grid,
    kernighan_lin,
    random_sampling,
)

ROWS = COLS = 6
K = 3

g = gen_grid(ROWS, COLS)
caps = default_capacities(g.n, K)
print(f"grid {ROWS}x{COLS}: {g.n} vertices, {g.m} edges, {K} parts of {caps}\n")

candidates = {
    "bury": bury_kpartition(g, caps, 0),
    "kernighan-lin": kernighan_lin(g, K, rng_seed=0),
    "best of 200 random": random_sampling(g, K, trials=200, rng_seed=0),
}

print(f"{'method':>20} | {'cut edges':>9} | {'matching sum':>12} | {'cut rank':>8}")
print("-" * 62)
for name, p in candidates.items():
    r = evaluate(g, p)
    print(f"{name:>20} | {r.cut_edges:>9} | {r.matching_sum:>12} | {r.cutrank_sum:>8}")

# The bury layout tends to look like nested "staircases": each part is a
# blob whose interior vertices are all buried (their whole neighborhood
# shares their color), so only a thin boundary can ever join a matching.
print("\nbury layout (color of each grid cell):")
p = candidates["bury"]
for r in range(ROWS):
    print("  " + " ".join(str(p.colors[r * COLS + c]) for c in range(COLS)))

r = evaluate(g, p)
print("\nper-pair matchings:", dict(sorted(r.pair_matchings.items())))
print("Bell pairs the protocol will spend:", r.matching_sum)

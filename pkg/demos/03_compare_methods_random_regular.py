"""Mini benchmark: bipartitioning random 6-regular graphs.

A desk-scale version of the full sweep (fewer samples); the ordering is
the same: the bury heuristic needs noticeably fewer Bell pairs than
Kernighan-Lin or best-of-N random sampling, and the gap grows with size.
"""

import statistics

from gspart import (
    bury_kpartition,
    default_capacities,
    evaluate,
    gen_random_regular,
    kernighan_lin,
    random_sampling,
)
from gspart.bench import derive_seed

SIZES = (50, 100, 200)
SAMPLES = 15
DEGREE = 6
MASTER_SEED = 7

print(f"random {DEGREE}-regular graphs, k=2, {SAMPLES} samples per size\n")
print(f"{'n':>5} | {'bury':>8} | {'kernighan-lin':>13} | {'random:100':>10}")
print("-" * 48)

for n in SIZES:
    sums = {"bury": [], "kl": [], "random": []}
    for s in range(SAMPLES):
        g = gen_random_regular(n, DEGREE, derive_seed(MASTER_SEED, "graph", n, s))
        seeds = {a: derive_seed(MASTER_SEED, "algo", a, n, s) for a in sums}
        parts = {
            "bury": bury_kpartition(g, default_capacities(n, 2), seeds["bury"]),
            "kl": kernighan_lin(g, 2, seeds["kl"]),
            "random": random_sampling(g, 2, 100, seeds["random"]),
        }
        for name, p in parts.items():
            sums[name].append(evaluate(g, p).matching_sum)
    means = {name: statistics.mean(vals) for name, vals in sums.items()}
    print(
        f"{n:>5} | {means['bury']:>8.1f} | {means['kl']:>13.1f} | {means['random']:>10.1f}"
    )

print(
    "\n(mean matching sum = mean Bell pairs per graph; lower is better;"
    "\n run the `gspart bench` command for the full CSV sweep)"
)

"""Small shared helpers for the demo scripts."""

import random

from gspart import Partition, default_capacities


def random_balanced_partition(n: int, k: int, rng: random.Random) -> Partition:
    caps = default_capacities(n, k)
    verts = list(range(n))
    rng.shuffle(verts)
    colors = [0] * n
    pos = 0
    for color, cap in enumerate(caps):
        for v in verts[pos : pos + cap]:
            colors[v] = color
        pos += cap
    return Partition(tuple(colors), k, caps)

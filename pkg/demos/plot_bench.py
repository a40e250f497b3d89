"""Plot a `gspart bench` CSV: mean metric vs size, one line per (algorithm, k).

Developer utility, not part of the library contract.  Needs matplotlib.

    gspart bench --family regular --sizes 50:300:50 --degree 6 \
        --k 2 --algos bury,kl,random:100 --samples 50 -o sweep.csv
    python demos/plot_bench.py sweep.csv matching_sum
"""

import csv
import statistics
import sys
from collections import defaultdict

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt


def main(path: str, metric: str = "matching_sum", out: str | None = None) -> None:
    series = defaultdict(lambda: defaultdict(list))
    with open(path, newline="", encoding="ascii") as handle:
        for row in csv.DictReader(handle):
            if row["error"]:
                continue
            series[(row["algorithm"], row["k"])][int(row["n"])].append(
                float(row[metric])
            )
    fig, ax = plt.subplots(figsize=(7, 4.5))
    for (algo, k), by_n in sorted(series.items()):
        xs = sorted(by_n)
        ys = [statistics.mean(by_n[n]) for n in xs]
        ax.plot(xs, ys, marker="o", label=f"{algo} (k={k})")
    ax.set_xlabel("vertices")
    ax.set_ylabel(f"mean {metric}")
    ax.legend()
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    target = out or (path.rsplit(".", 1)[0] + f"_{metric}.png")
    fig.savefig(target, dpi=150)
    print("wrote", target)


if __name__ == "__main__":
    if len(sys.argv) < 2:
        sys.exit(__doc__)
    main(*sys.argv[1:])

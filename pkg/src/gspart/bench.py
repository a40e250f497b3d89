"""Benchmark sweeps: family x size x k x algorithm x sample, one CSV row per run.

Per-run seeds are split from the master seed with a hash so that adding an
algorithm to a sweep never changes which graphs are sampled; identical
specs therefore produce identical CSVs except for the wall-time column.
"""

from __future__ import annotations

import csv
import hashlib
import time
from dataclasses import dataclass
from typing import Iterator, TextIO

from . import fileio
from .graphs import (
    Graph,
    Partition,
    default_capacities,
    gen_erdos_renyi,
    gen_near_square_grid,
    gen_random_regular,
)
from .metrics import evaluate
from .partitioners import bury_kpartition, kernighan_lin, random_sampling

__all__ = [
    "BenchSpec",
    "CSV_COLUMNS",
    "derive_seed",
    "parse_algorithm",
    "run_algorithm",
    "run_bench",
]

CSV_COLUMNS = [
    "family",
    "n",
    "k",
    "algorithm",
    "rng_seed",
    "cut_edges",
    "matching_sum",
    "cutrank_sum",
    "wall_time_ms",
    "error",
]

FAMILIES = ("grid", "regular", "erdos-renyi", "file")


def derive_seed(master: int, *parts) -> int:
    """Stable 63-bit seed from the master seed and a role tag."""
    text = ":".join([str(master), *map(str, parts)])
    digest = hashlib.sha256(text.encode("ascii")).digest()
    return int.from_bytes(digest[:8], "big") >> 1


@dataclass(frozen=True)
class BenchSpec:
    """One sweep: which graphs to sample and which algorithms to run on them."""

    family: str
    sizes: tuple[int, ...] = ()
    k_list: tuple[int, ...] = (2,)
    algorithms: tuple[str, ...] = ("bury",)
    samples: int = 1
    degree: int | None = None
    edge_prob: float | None = None
    rng_seed: int = 0
    inputs: tuple[str, ...] = ()

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; choose from {FAMILIES}")
        if not self.algorithms:
            raise ValueError("at least one algorithm required")
        if self.samples < 1:
            raise ValueError(f"samples must be positive, got {self.samples}")
        if not self.k_list:
            raise ValueError("at least one k required")
        if self.family == "file":
            if not self.inputs:
                raise ValueError("family 'file' needs input paths")
        elif not self.sizes:
            raise ValueError("at least one size required")
        if self.family == "regular" and self.degree is None:
            raise ValueError("family 'regular' needs a degree")
        if self.family == "erdos-renyi" and self.edge_prob is None:
            raise ValueError("family 'erdos-renyi' needs an edge probability")
        for algo in self.algorithms:
            parse_algorithm(algo)


def parse_algorithm(spec: str) -> tuple[str, int | None]:
    """Split an algorithm spec like "random:100" or "bury-seed:3" into
    (name, parameter)."""
    name, sep, arg = spec.partition(":")
    if name not in ("bury", "bury-seed", "kl", "random"):
        raise ValueError(f"unknown algorithm {spec!r}")
    if name in ("bury-seed", "random"):
        if not sep:
            raise ValueError(f"algorithm {name!r} needs a parameter, e.g. {name}:1")
        try:
            value = int(arg)
        except ValueError:
            raise ValueError(f"bad parameter in {spec!r}") from None
        if name == "random" and value < 1:
            raise ValueError(f"random sampling needs at least 1 trial, got {value}")
        return name, value
    if sep:
        raise ValueError(f"algorithm {name!r} takes no parameter, got {spec!r}")
    return name, None


def run_algorithm(spec: str, g: Graph, k: int, seed: int) -> Partition:
    """Run one partitioner by its spec string."""
    name, arg = parse_algorithm(spec)
    if name == "bury":
        return bury_kpartition(g, default_capacities(g.n, k), seed)
    if name == "bury-seed":
        return bury_kpartition(g, default_capacities(g.n, k), seed, seed_vertex=arg)
    if name == "kl":
        return kernighan_lin(g, k, seed)
    assert name == "random"
    return random_sampling(g, k, arg, seed)


def _instances(spec: BenchSpec) -> Iterator[tuple[str, int | str]]:
    if spec.family == "file":
        for path in spec.inputs:
            yield spec.family, path
    else:
        for size in spec.sizes:
            yield spec.family, size


def _make_graph(spec: BenchSpec, instance: int | str, sample: int) -> Graph:
    if spec.family == "file":
        with open(instance, "r", encoding="ascii") as handle:
            return fileio.read_edge_list(handle.read())
    seed = derive_seed(spec.rng_seed, "graph", spec.family, instance, sample)
    if spec.family == "grid":
        return gen_near_square_grid(int(instance))
    if spec.family == "regular":
        return gen_random_regular(int(instance), spec.degree, seed)
    assert spec.family == "erdos-renyi"
    return gen_erdos_renyi(int(instance), spec.edge_prob, seed)


def run_bench(spec: BenchSpec, out: TextIO) -> int:
    """Execute the sweep, writing one CSV row per (instance, sample, k,
    algorithm) run.  A failed run becomes a row with the error column set
    and the sweep continues.  Returns the number of rows written."""
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    rows = 0
    for family, instance in _instances(spec):
        for sample in range(spec.samples):
            try:
                g = _make_graph(spec, instance, sample)
            except Exception as exc:  # noqa: BLE001 - recorded, sweep continues
                for k in spec.k_list:
                    for algo in spec.algorithms:
                        writer.writerow(
                            [family, instance, k, algo, "", "", "", "", "", str(exc)]
                        )
                        rows += 1
                continue
            for k in spec.k_list:
                for algo in spec.algorithms:
                    seed = derive_seed(
                        spec.rng_seed, "algo", algo, family, instance, k, sample
                    )
                    try:
                        start = time.perf_counter()
                        p = run_algorithm(algo, g, k, seed)
                        elapsed_ms = (time.perf_counter() - start) * 1000.0
                        report = evaluate(g, p)
                        writer.writerow(
                            [
                                family,
                                g.n,
                                k,
                                algo,
                                seed,
                                report.cut_edges,
                                report.matching_sum,
                                report.cutrank_sum,
                                f"{elapsed_ms:.3f}",
                                "",
                            ]
                        )
                    except Exception as exc:  # noqa: BLE001
                        writer.writerow(
                            [family, g.n, k, algo, seed, "", "", "", "", str(exc)]
                        )
                    rows += 1
    return rows

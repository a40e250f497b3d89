"""Acceptance suite: one test per release criterion, each printing a
[PASS]/[FAIL] line (visible under ``pytest -s tests/test_acceptance.py``).

Budgets are wall-clock seconds measured around the work the criterion
prescribes.
"""

import random
import statistics
import subprocess
import sys
import time

import pytest

from gspart import (
    BitMatrix,
    GraphState,
    VcgTrace,
    brute_force_matching,
    bury_kpartition,
    default_capacities,
    evaluate,
    exhaustive_optimum,
    gen_erdos_renyi,
    gen_grid,
    gen_random_regular,
    graft_star,
    hopcroft_karp,
    kernighan_lin,
    matching_sum,
    random_sampling,
    rank_gf2,
    run_vcg,
)
from gspart.bench import derive_seed
from _util import (
    complete_graph,
    naive_rank_gf2,
    path_graph,
    random_balanced_partition,
    random_instance,
)
from test_matching import check_konig, random_cross_instance
from test_gf2 import random_bitmatrix
from test_vcg import random_graft_setup


def check(name: str, ok: bool, detail: str = "") -> None:
    line = f"[{'PASS' if ok else 'FAIL'}] {name}"
    if detail:
        line += f"  ({detail})"
    print(line)
    assert ok, line


def test_reference_grid_instance():
    """6x6 grid, k=3: bury heuristic needs <= 10 Bell pairs (target 9) and
    the grafting run reproduces the grid exactly with that many bells."""
    start = time.perf_counter()
    g = gen_grid(6, 6)
    p = bury_kpartition(g, default_capacities(36, 3))
    msum = matching_sum(g, p)
    state, trace = run_vcg(g, p)
    elapsed = time.perf_counter() - start
    check(
        "6x6 grid k=3 reference instance",
        msum <= 10
        and state.matches_graph(g)
        and trace.bell_pairs_used == msum
        and elapsed < 1.0,
        f"matching_sum={msum} (target 9), bells={trace.bell_pairs_used}, {elapsed:.2f}s < 1s",
    )


def test_vcg_correctness_suite():
    """200 randomized (graph, balanced partition) instances, n <= 60,
    k in {2,3,4}: final state equals the input graph and the Bell count
    equals the matching sum, every single run."""
    start = time.perf_counter()
    rng = random.Random(2024)
    state_ok = bells_ok = 0
    runs = 200
    for _ in range(runs):
        n = rng.randint(2, 60)
        g = gen_erdos_renyi(n, rng.uniform(0.05, 0.3), rng.getrandbits(32))
        p = random_balanced_partition(n, rng.randint(2, min(4, n)), rng)
        state, trace = run_vcg(g, p)
        state_ok += state.matches_graph(g)
        bells_ok += trace.bell_pairs_used == matching_sum(g, p)
    elapsed = time.perf_counter() - start
    check(
        "vcg correctness 200 runs",
        state_ok == runs and bells_ok == runs and elapsed < 30.0,
        f"state {state_ok}/200, bells {bells_ok}/200, {elapsed:.1f}s < 30s",
    )


def test_metric_ordering():
    """cutrank_sum <= matching_sum <= cut_edges on 1000 randomized
    (graph, partition) pairs, zero violations."""
    start = time.perf_counter()
    rng = random.Random(777)
    violations = 0
    for i in range(1000):
        if i % 3 == 0:
            n = rng.choice([9, 16, 25, 36])
            g = gen_grid(*{9: (3, 3), 16: (4, 4), 25: (5, 5), 36: (6, 6)}[n])
            p = random_balanced_partition(n, rng.randint(2, 4), rng)
        elif i % 3 == 1:
            n = rng.randrange(8, 40, 2)
            g = gen_random_regular(n, rng.choice([3, 4, 6]), rng.getrandbits(32))
            p = random_balanced_partition(n, rng.randint(2, 4), rng)
        else:
            g, p = random_instance(rng)
        report = evaluate(g, p)
        if not (0 <= report.cutrank_sum <= report.matching_sum <= report.cut_edges):
            violations += 1
    elapsed = time.perf_counter() - start
    check(
        "metric ordering 1000 pairs",
        violations == 0 and elapsed < 60.0,
        f"{violations} violations, {elapsed:.1f}s < 60s",
    )


def test_matching_oracle():
    """hopcroft_karp equals the brute-force oracle on 500 random bipartite
    instances (<= 20 edges); Konig equality and full edge coverage hold in
    every run."""
    start = time.perf_counter()
    rng = random.Random(31415)
    for _ in range(500):
        bg = random_cross_instance(rng)
        result = hopcroft_karp(bg)
        assert result.size == brute_force_matching(bg)
        check_konig(bg, result)
    elapsed = time.perf_counter() - start
    check("matching vs brute force 500 instances", elapsed < 10.0, f"{elapsed:.1f}s < 10s")


def test_gf2_rank_oracle():
    """rank_gf2 equals naive elimination on 500 random matrices up to 64x64;
    all-ones rank is 1 and identity rank is n."""
    start = time.perf_counter()
    rng = random.Random(27182)
    for _ in range(500):
        m = random_bitmatrix(rng, max_dim=64)
        assert rank_gf2(m) == naive_rank_gf2(m.to_lists())
    for a, b in [(1, 1), (3, 7), (64, 64), (10, 2)]:
        assert rank_gf2(BitMatrix.from_lists([[1] * b for _ in range(a)])) == 1
    for n in (1, 5, 64):
        eye = BitMatrix(tuple(1 << i for i in range(n)), n)
        assert rank_gf2(eye) == n
    elapsed = time.perf_counter() - start
    check("gf2 rank vs naive oracle 500 matrices", elapsed < 10.0, f"{elapsed:.1f}s < 10s")


def test_graphstate_algebra():
    """Local complementation is an involution (200 random state/vertex
    pairs); Y-measuring any vertex of P_n yields P_{n-1} for n in 3..100;
    grafting preserves preexisting remote-neighbor edges (200 grafts)."""
    start = time.perf_counter()
    rng = random.Random(16180)
    for _ in range(200):
        n = rng.randint(1, 20)
        g = gen_erdos_renyi(n, rng.uniform(0.1, 0.6), rng.getrandbits(32))
        s = GraphState.from_graph(g)
        v = rng.randrange(n)
        s.local_complement(v)
        s.local_complement(v)
        assert s.matches_graph(g)
    for n in range(3, 101):
        s = GraphState.from_graph(path_graph(n))
        v = rng.randrange(n)
        s.measure_y(v)
        order = [u for u in range(n) if u != v]
        assert s.edge_set() == {(a, b) for a, b in zip(order, order[1:])}
    for _ in range(200):
        state, v, targets = random_graft_setup(rng)
        before = state.edge_set()
        graft_star(state, VcgTrace(), v, targets, (0, 1))
        added = {(min(v, u), max(v, u)) for u in targets}
        assert state.edge_set() == before | added
    elapsed = time.perf_counter() - start
    check("graph-state algebra", elapsed < 10.0, f"{elapsed:.1f}s < 10s")


def test_small_instance_optimality_gap():
    """On P4 (k=2), P12 (k=3), K4 (k=2) and the 4x4 grid (k=2) the bury
    heuristic lands within +1 of the exhaustive optimum (oracle values
    pinned from its first run)."""
    start = time.perf_counter()
    cases = [
        ("P4 k=2", path_graph(4), 2, 1),
        ("P12 k=3", path_graph(12), 3, 2),
        ("K4 k=2", complete_graph(4), 2, 2),
        ("4x4 grid k=2", gen_grid(4, 4), 2, 4),
    ]
    gaps = []
    for name, g, k, pinned in cases:
        _, optimum = exhaustive_optimum(g, k)
        assert optimum == pinned, f"{name}: oracle drifted from pinned {pinned}"
        bury_value = matching_sum(g, bury_kpartition(g, default_capacities(g.n, k)))
        assert bury_value <= optimum + 1, f"{name}: bury {bury_value} > {optimum}+1"
        gaps.append(bury_value - optimum)
    elapsed = time.perf_counter() - start
    check(
        "small-instance optimality gap",
        elapsed < 120.0,
        f"gaps={gaps}, {elapsed:.1f}s < 2min",
    )


@pytest.fixture(scope="module")
def regular6_sweep():
    """Shared 6-regular k=2 sweep: per-QPU sizes 25/50/100, 50 samples per
    size, three methods; returns per-size means of both metrics."""
    start = time.perf_counter()
    samples = 50
    sizes = (50, 100, 200)
    means: dict[tuple[int, str, str], float] = {}
    for n in sizes:
        per_algo: dict[str, dict[str, list[int]]] = {
            a: {"matching": [], "cutrank": []} for a in ("bury", "kl", "random")
        }
        for s in range(samples):
            g = gen_random_regular(n, 6, derive_seed(12, "graph", "regular", n, s))
            for algo in per_algo:
                seed = derive_seed(12, "algo", algo, "regular", n, s)
                if algo == "bury":
                    p = bury_kpartition(g, default_capacities(n, 2), seed)
                elif algo == "kl":
                    p = kernighan_lin(g, 2, seed)
                else:
                    p = random_sampling(g, 2, 100, seed)
                report = evaluate(g, p)
                per_algo[algo]["matching"].append(report.matching_sum)
                per_algo[algo]["cutrank"].append(report.cutrank_sum)
        for algo, metrics in per_algo.items():
            for metric, values in metrics.items():
                means[(n, algo, metric)] = statistics.mean(values)
    return means, sizes, time.perf_counter() - start


def test_regular6_matching_ordering(regular6_sweep):
    """Random 6-regular bipartitioning: mean matching sum of bury is
    strictly below Kernighan-Lin's and random sampling's at every size."""
    means, sizes, elapsed = regular6_sweep
    ok = all(
        means[(n, "bury", "matching")] < means[(n, "kl", "matching")]
        and means[(n, "bury", "matching")] < means[(n, "random", "matching")]
        for n in sizes
    )
    summary = "; ".join(
        f"n={n}: bury={means[(n, 'bury', 'matching')]:.1f} "
        f"kl={means[(n, 'kl', 'matching')]:.1f} "
        f"rand={means[(n, 'random', 'matching')]:.1f}"
        for n in sizes
    )
    check(
        "method ordering (matching, 6-regular k=2)",
        ok and elapsed < 300.0,
        f"{summary}; sweep {elapsed:.0f}s < 5min",
    )


def test_regular6_cutrank_ordering(regular6_sweep):
    """Same sweep, cut-rank metric: bury's mean stays strictly below both
    baselines at every size."""
    means, sizes, _ = regular6_sweep
    ok = all(
        means[(n, "bury", "cutrank")] < means[(n, "kl", "cutrank")]
        and means[(n, "bury", "cutrank")] < means[(n, "random", "cutrank")]
        for n in sizes
    )
    summary = "; ".join(
        f"n={n}: bury={means[(n, 'bury', 'cutrank')]:.1f} "
        f"kl={means[(n, 'kl', 'cutrank')]:.1f} "
        f"rand={means[(n, 'random', 'cutrank')]:.1f}"
        for n in sizes
    )
    check("method ordering (cut rank, 6-regular k=2)", ok, summary)


def test_cli_determinism(tmp_path):
    """Identical CLI invocations with identical seeds give byte-identical
    partition files and CSVs (wall-time column excluded)."""

    def cli(*args):
        proc = subprocess.run(
            [sys.executable, "-m", "gspart", *args],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0, proc.stderr
        return proc

    graph = tmp_path / "g.el"
    cli("gen", "--family", "regular", "--n", "40", "--degree", "3", "--seed", "9", "-o", str(graph))

    partitions = []
    for tag in ("a", "b"):
        out = tmp_path / f"p_{tag}.txt"
        cli("partition", "-i", str(graph), "-k", "3", "--algo", "random:20",
            "--seed", "5", "-o", str(out))
        partitions.append(out.read_bytes())

    csvs = []
    for tag in ("a", "b"):
        out = tmp_path / f"bench_{tag}.csv"
        cli("bench", "--family", "regular", "--sizes", "20,30", "--degree", "3",
            "--k", "2", "--algos", "bury,kl,random:10", "--samples", "2",
            "--seed", "11", "-o", str(out))
        rows = out.read_text(encoding="ascii").strip().split("\n")
        header = rows[0].split(",")
        drop = header.index("wall_time_ms")
        csvs.append([
            ",".join(col for i, col in enumerate(row.split(",")) if i != drop)
            for row in rows
        ])

    check(
        "cli determinism",
        partitions[0] == partitions[1] and csvs[0] == csvs[1],
        "partition bytes equal; csv equal modulo wall_time",
    )

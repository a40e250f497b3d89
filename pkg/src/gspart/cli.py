"""Command-line surface: generate graphs, partition, evaluate, run the
grafting protocol, and sweep benchmarks to CSV.

Exit codes: 0 success, 1 usage error, 2 verification failure, 3 I/O or
input-format error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import __version__, fileio
from .bench import CSV_COLUMNS, BenchSpec, run_algorithm, run_bench
from .fileio import ParseError
from .graphs import (
    Graph,
    Partition,
    gen_erdos_renyi,
    gen_grid,
    gen_near_square_grid,
    gen_random_regular,
)
from .metrics import MetricsReport, cut_edges, matching_sum
from .vcg import run_vcg

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFY = 2
EXIT_IO = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse default exits 2; usage errors are 1
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _read_text(path: str) -> str:
    with open(path, "r", encoding="ascii") as handle:
        return handle.read()


def _write_text(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="ascii", newline="") as handle:
            handle.write(text)


def _load_graph(path: str) -> Graph:
    return fileio.read_edge_list(_read_text(path))


def _load_partition(path: str, k: int | None, expected_n: int) -> Partition:
    text = _read_text(path)
    if k is None:
        seen = [int(s) for s in text.split() if s.lstrip("-").isdigit()]
        k = max(seen, default=0) + 1
    p = fileio.read_partition_file(text, k)
    if p.n != expected_n:
        # a length mismatch against the graph is caller misuse, not bad input
        raise ValueError(
            f"partition {path!r} has {p.n} colors but the graph has {expected_n} vertices"
        )
    return p


def _parse_sizes(spec: str) -> tuple[int, ...]:
    if ":" in spec:
        parts = spec.split(":")
        if len(parts) != 3:
            raise ValueError(f"size range must be lo:hi:step, got {spec!r}")
        lo, hi, step = (int(x) for x in parts)
        if step < 1 or hi < lo:
            raise ValueError(f"bad size range {spec!r}")
        return tuple(range(lo, hi + 1, step))
    return tuple(int(x) for x in spec.split(","))


def _parse_int_list(spec: str) -> tuple[int, ...]:
    return tuple(int(x) for x in spec.split(","))


def cmd_gen(args: argparse.Namespace) -> int:
    if args.family == "grid":
        if args.rows is not None or args.cols is not None:
            if args.rows is None or args.cols is None:
                raise ValueError("--rows and --cols go together")
            g = gen_grid(args.rows, args.cols)
        elif args.n is not None:
            g = gen_near_square_grid(args.n)
        else:
            raise ValueError("grid needs --rows/--cols or --n")
    elif args.family == "regular":
        if args.n is None or args.degree is None:
            raise ValueError("regular needs --n and --degree")
        g = gen_random_regular(args.n, args.degree, args.seed)
    else:  # erdos-renyi
        if args.n is None or args.p is None:
            raise ValueError("erdos-renyi needs --n and --p")
        g = gen_erdos_renyi(args.n, args.p, args.seed)
    _write_text(args.output, fileio.write_edge_list(g))
    if args.metis_out:
        _write_text(args.metis_out, fileio.write_metis_graph(g))
    return EXIT_OK


def cmd_partition(args: argparse.Namespace) -> int:
    g = _load_graph(args.input)
    p = run_algorithm(args.algo, g, args.k, args.seed)
    _write_text(args.output, fileio.write_partition_file(p))
    return EXIT_OK


def cmd_eval(args: argparse.Namespace) -> int:
    g = _load_graph(args.input)
    p = _load_partition(args.partition, args.k, g.n)
    wanted = set(args.metrics.split(","))
    unknown = wanted - {"edges", "matching", "cutrank"}
    if unknown:
        raise ValueError(f"unknown metrics: {sorted(unknown)}")
    if args.json or args.csv:
        wanted = {"edges", "matching", "cutrank"}
    # compute only what was asked for; cut rank dominates on big instances
    pair_matchings: dict[tuple[int, int], int] = {}
    pair_cutranks: dict[tuple[int, int], int] = {}
    if wanted & {"matching", "cutrank"}:
        from .gf2 import biadjacency, rank_gf2
        from .matching import cross_graph, hopcroft_karp

        for a in range(p.k):
            for b in range(a + 1, p.k):
                bg = cross_graph(g, p, a, b)
                if "matching" in wanted:
                    pair_matchings[(a, b)] = hopcroft_karp(bg).size
                if "cutrank" in wanted:
                    pair_cutranks[(a, b)] = rank_gf2(biadjacency(bg))
    edge_count = cut_edges(g, p) if "edges" in wanted else None
    if args.json:
        report = MetricsReport(edge_count, pair_matchings, pair_cutranks)
        print(json.dumps(report.as_dict(), indent=2))
    else:
        print(f"graph: n={g.n} m={g.m}")
        print(f"partition: k={p.k} counts={','.join(map(str, p.counts()))}")
        if edge_count is not None:
            print(f"cut_edges: {edge_count}")
        for a, b in sorted(pair_matchings or pair_cutranks):
            fields = []
            if "matching" in wanted:
                fields.append(f"matching={pair_matchings[(a, b)]}")
            if "cutrank" in wanted:
                fields.append(f"cutrank={pair_cutranks[(a, b)]}")
            print(f"pair {a}-{b}: " + " ".join(fields))
        if "matching" in wanted:
            print(f"matching_sum: {sum(pair_matchings.values())}")
        if "cutrank" in wanted:
            print(f"cutrank_sum: {sum(pair_cutranks.values())}")
    if args.csv:
        import csv
        import os

        new_file = not os.path.exists(args.csv) or os.path.getsize(args.csv) == 0
        with open(args.csv, "a", encoding="ascii", newline="") as handle:
            writer = csv.writer(handle, lineterminator="\n")
            if new_file:
                writer.writerow(CSV_COLUMNS)
            writer.writerow(
                [
                    "file",
                    g.n,
                    p.k,
                    args.csv_algo,
                    "",
                    edge_count,
                    sum(pair_matchings.values()),
                    sum(pair_cutranks.values()),
                    "",
                    "",
                ]
            )
    return EXIT_OK


def cmd_vcg(args: argparse.Namespace) -> int:
    g = _load_graph(args.input)
    p = _load_partition(args.partition, args.k, g.n)
    state, trace = run_vcg(g, p)
    if args.trace_out:
        _write_text(args.trace_out, trace.format_text())
    print(f"bell_pairs: {trace.bell_pairs_used}")
    for (a, b), count in sorted(trace.per_pair_bells.items()):
        print(f"pair {a}-{b}: {count}")
    ok = state.matches_graph(g)
    if not ok:
        want = g.edge_set()
        got = state.edge_set()
        print("verification: FAILED (state differs from input graph)")
        for u, v in sorted(want - got):
            print(f"  missing edge {u} {v}")
        for u, v in sorted(got - want):
            print(f"  extra edge {u} {v}")
        stray = sorted(state.qubits - set(range(g.n)))
        if stray:
            print(f"  stray qubits: {stray}")
        return EXIT_VERIFY
    if args.verify:
        expected = matching_sum(g, p)
        if trace.bell_pairs_used != expected:
            print(
                f"verification: FAILED (bell pairs {trace.bell_pairs_used} != "
                f"matching sum {expected})"
            )
            return EXIT_VERIFY
        print(f"verification: ok (state matches graph; {expected} bells == matching sum)")
    else:
        print("verification: ok (state matches graph)")
    return EXIT_OK


def cmd_bench(args: argparse.Namespace) -> int:
    spec = BenchSpec(
        family=args.family,
        sizes=_parse_sizes(args.sizes) if args.sizes else (),
        k_list=_parse_int_list(args.k),
        algorithms=tuple(args.algos.split(",")) if args.algos else (),
        samples=args.samples,
        degree=args.degree,
        edge_prob=args.p,
        rng_seed=args.seed,
        inputs=tuple(args.inputs or ()),
    )
    if args.output is None or args.output == "-":
        run_bench(spec, sys.stdout)
    else:
        with open(args.output, "w", encoding="ascii", newline="") as handle:
            run_bench(spec, handle)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="gspart", description=__doc__)
    parser.add_argument("--version", action="version", version=f"gspart {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a benchmark graph as an edge list")
    gen.add_argument("--family", required=True, choices=["grid", "regular", "erdos-renyi"])
    gen.add_argument("--rows", type=int)
    gen.add_argument("--cols", type=int)
    gen.add_argument("--n", type=int)
    gen.add_argument("--degree", type=int)
    gen.add_argument("--p", type=float)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("-o", "--output", help="edge-list path (default stdout)")
    gen.add_argument("--metis-out", help="also write the graph in METIS format")
    gen.set_defaults(func=cmd_gen)

    part = sub.add_parser("partition", help="partition a graph into k parts")
    part.add_argument("-i", "--input", required=True, help="edge-list path")
    part.add_argument("-k", type=int, required=True)
    part.add_argument(
        "--algo",
        default="bury",
        help="bury | bury-seed:<vertex> | kl | random:<trials>",
    )
    part.add_argument("--seed", type=int, default=0)
    part.add_argument("-o", "--output", help="partition-file path (default stdout)")
    part.set_defaults(func=cmd_partition)

    ev = sub.add_parser("eval", help="score a partition against a graph")
    ev.add_argument("-i", "--input", required=True, help="edge-list path")
    ev.add_argument("-p", "--partition", required=True, help="partition-file path")
    ev.add_argument("-k", type=int, help="number of colors (default: max color + 1)")
    ev.add_argument("--metrics", default="edges,matching,cutrank")
    ev.add_argument("--json", action="store_true", help="print the report as JSON")
    ev.add_argument("--csv", help="append a CSV row to this path")
    ev.add_argument("--csv-algo", default="external", help="algorithm label for the CSV row")
    ev.set_defaults(func=cmd_eval)

    vcg = sub.add_parser("vcg", help="run the grafting protocol and verify the state")
    vcg.add_argument("-i", "--input", required=True, help="edge-list path")
    vcg.add_argument("-p", "--partition", required=True, help="partition-file path")
    vcg.add_argument("-k", type=int, help="number of colors (default: max color + 1)")
    vcg.add_argument(
        "--verify",
        action="store_true",
        help="also require the Bell count to equal the matching sum",
    )
    vcg.add_argument("--trace-out", help="write the protocol event log to this path")
    vcg.set_defaults(func=cmd_vcg)

    bench = sub.add_parser("bench", help="sweep algorithms over graph families to CSV")
    bench.add_argument("--family", required=True, choices=["grid", "regular", "erdos-renyi", "file"])
    bench.add_argument("--sizes", help="comma list '25,50' or inclusive range 'lo:hi:step'")
    bench.add_argument("--degree", type=int)
    bench.add_argument("--p", type=float)
    bench.add_argument("--k", default="2", help="comma list of part counts")
    bench.add_argument("--algos", default="bury", help="comma list of algorithm specs")
    bench.add_argument("--samples", type=int, default=1)
    bench.add_argument("--seed", type=int, default=0)
    bench.add_argument("--inputs", nargs="+", help="edge-list paths for family 'file'")
    bench.add_argument("-o", "--output", help="CSV path (default stdout)")
    bench.set_defaults(func=cmd_bench)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except (ParseError, UnicodeDecodeError) as exc:
        print(f"gspart: input error: {exc}", file=sys.stderr)
        return EXIT_IO
    except OSError as exc:
        print(f"gspart: i/o error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ValueError as exc:
        print(f"gspart: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

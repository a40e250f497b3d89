"""Command line: build a corpus of compiled QAOA graph states.

    qaoa-corpus --sizes 5,10,15 --out-dir corpus/

Exit codes: 0 success (manifest written, possibly with error rows),
1 usage error, 2 the compiler is unavailable.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from .build import DEFAULT_BETA, DEFAULT_GAMMA, CompilerUnavailable, build_corpus


def _parse_sizes(spec: str) -> list[int]:
    sizes = [int(x) for x in spec.split(",") if x]
    if not sizes:
        raise ValueError("at least one size required")
    if any(s < 2 for s in sizes):
        raise ValueError("sizes must be >= 2")
    return sizes


def main(argv: Sequence[str] | None = None) -> int:
    parser = argparse.ArgumentParser(prog="qaoa-corpus", description=__doc__)
    parser.add_argument(
        "--sizes", required=True, help="comma list of QAOA circuit widths, e.g. 5,10,230"
    )
    parser.add_argument("--out-dir", required=True)
    parser.add_argument("--beta", type=float, default=DEFAULT_BETA)
    parser.add_argument("--gamma", type=float, default=DEFAULT_GAMMA)
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    try:
        sizes = _parse_sizes(args.sizes)
    except ValueError as exc:
        print(f"qaoa-corpus: error: {exc}", file=sys.stderr)
        return 1
    try:
        manifest = build_corpus(sizes, args.out_dir, args.beta, args.gamma)
    except CompilerUnavailable as exc:
        print(f"qaoa-corpus: environment error: {exc}", file=sys.stderr)
        return 2
    print(f"wrote {manifest}")
    return 0


if __name__ == "__main__":
    sys.exit(main())

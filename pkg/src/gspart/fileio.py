"""Text formats: edge lists, METIS .graph export, and partition files.

All formats are ASCII with '\\n' line endings.  Vertex indices are 0-based
in edge-list and partition files; METIS output is 1-based per that format.
"""

from __future__ import annotations

from .graphs import Graph, Partition

__all__ = [
    "ParseError",
    "read_edge_list",
    "write_edge_list",
    "write_metis_graph",
    "read_partition_file",
    "write_partition_file",
]


class ParseError(ValueError):
    """Malformed input file; carries the 1-based offending line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


def read_edge_list(text: str) -> Graph:
    """Parse an edge list: one "u v" pair per line, '#' comments ignored.

    An optional first line "n <count>" fixes the vertex count; otherwise it
    is the largest index seen plus one.  Self-loops and duplicate edges are
    rejected.
    """
    declared_n: int | None = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    max_index = -1
    first_significant = True
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if first_significant and parts[0] == "n":
            if len(parts) != 2:
                raise ParseError("header must be 'n <count>'", lineno)
            try:
                declared_n = int(parts[1])
            except ValueError:
                raise ParseError(f"bad vertex count {parts[1]!r}", lineno) from None
            if declared_n < 0:
                raise ParseError(f"negative vertex count {declared_n}", lineno)
            first_significant = False
            continue
        first_significant = False
        if len(parts) != 2:
            raise ParseError(f"expected 'u v', got {line!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"non-integer endpoint in {line!r}", lineno) from None
        if u < 0 or v < 0:
            raise ParseError(f"negative vertex index in {line!r}", lineno)
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", lineno)
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise ParseError(f"duplicate edge ({u}, {v})", lineno)
        if declared_n is not None and max(u, v) >= declared_n:
            raise ParseError(
                f"vertex {max(u, v)} out of range for declared n={declared_n}", lineno
            )
        seen.add(key)
        edges.append(key)
        max_index = max(max_index, u, v)
    n = declared_n if declared_n is not None else max_index + 1
    return Graph(n, edges)


def write_edge_list(g: Graph) -> str:
    """Inverse of read_edge_list; always writes the "n <count>" header so
    isolated vertices survive a round-trip."""
    lines = [f"n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def write_metis_graph(g: Graph) -> str:
    """Standard METIS .graph format: "n m" header, then line i+1 lists the
    1-based neighbors of vertex i."""
    lines = [f"{g.n} {g.m}"]
    for v in range(g.n):
        lines.append(" ".join(str(u + 1) for u in g.neighbors(v)))
    return "\n".join(lines) + "\n"


def read_partition_file(text: str, k: int, expected_n: int | None = None) -> Partition:
    """Parse a partition file: line i holds the color of vertex i, in 0..k-1.

    When ``expected_n`` is given (e.g. from the graph the partition belongs
    to), a mismatched line count is an error.  The returned partition's
    capacities are the realized color counts.
    """
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    colors: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        try:
            c = int(line)
        except ValueError:
            raise ParseError(f"expected an integer color, got {line!r}", lineno) from None
        if not (0 <= c < k):
            raise ParseError(f"color {c} not in 0..{k - 1}", lineno)
        colors.append(c)
    if expected_n is not None and len(colors) != expected_n:
        raise ParseError(
            f"expected {expected_n} colors, found {len(colors)}", len(colors) + 1
        )
    return Partition(tuple(colors), k)


def write_partition_file(p: Partition) -> str:
    """One color per line, line i = color of vertex i."""
    return "\n".join(str(c) for c in p.colors) + "\n"

"""Compile QAOA MAX-CUT circuits into graph-state edge lists.

Pipeline per entry: build the depth-one QAOA circuit for MAX-CUT on the
complete graph K_n, transpile it to a measurement pattern with Graphix,
standardize and fold away all Pauli measurements (the compiler's
graph-state optimization), then dump the surviving pattern graph as an
edge-list file in the partitioning toolkit's format (0-based indices,
``n <count>`` header).

Rotation angles are fixed and recorded in the manifest: the compiled
topology is what the benchmarks consume, and generic (non-Clifford) angles
keep every rotation node alive through the Pauli preprocessing.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass, field
from itertools import combinations
from pathlib import Path
from typing import Iterable, Sequence

__all__ = [
    "CompilerUnavailable",
    "CorpusEntry",
    "DEFAULT_BETA",
    "DEFAULT_GAMMA",
    "MANIFEST_COLUMNS",
    "build_corpus",
    "build_qaoa_maxcut_graphstate",
]

DEFAULT_BETA = 0.1
DEFAULT_GAMMA = 0.1

MANIFEST_COLUMNS = [
    "source_qubits",
    "compiled_vertices",
    "compiled_edges",
    "path",
    "compiler",
    "compiler_version",
    "beta",
    "gamma",
    "error",
]


class CompilerUnavailable(RuntimeError):
    """The external MBQC compiler is not importable in this environment."""


def _import_graphix():
    try:
        import graphix
    except ImportError as exc:
        raise CompilerUnavailable(
            "the MBQC compiler 'graphix' is not installed; "
            "install it (pip install graphix) to build corpus entries"
        ) from exc
    return graphix


@dataclass(frozen=True)
class CorpusEntry:
    """One compiled graph state plus its provenance."""

    source_qubits: int
    compiled_vertices: int
    compiled_edges: int
    path: Path
    metadata: dict = field(default_factory=dict)


def _qaoa_maxcut_circuit(graphix_mod, num_qubits: int, beta: float, gamma: float):
    circuit = graphix_mod.Circuit(num_qubits)
    for u, v in combinations(range(num_qubits), 2):
        circuit.cnot(u, v)
        circuit.rz(v, gamma)
        circuit.cnot(u, v)
    for q in range(num_qubits):
        circuit.rx(q, beta)
    return circuit


def _compile_to_graph(circuit) -> tuple[list[int], list[tuple[int, int]]]:
    transpiled = circuit.transpile()
    # newer graphix returns a TranspileResult wrapper, older ones the pattern
    pattern = getattr(transpiled, "pattern", transpiled)
    pattern.standardize()
    pattern.shift_signals()
    pattern.perform_pauli_measurements()
    nodes, edges = pattern.get_graph()
    return list(nodes), [tuple(e) for e in edges]


def write_graph_edges(
    nodes: Iterable[int], edges: Iterable[tuple[int, int]], path: Path
) -> tuple[int, int]:
    """Relabel arbitrary node ids to compact 0-based indices and write the
    edge-list file; returns (vertex_count, edge_count)."""
    index = {node: i for i, node in enumerate(sorted(nodes))}
    normalized: set[tuple[int, int]] = set()
    for u, v in edges:
        if u == v:
            raise ValueError(f"compiler produced a self-loop at node {u}")
        if u not in index or v not in index:
            raise ValueError(f"edge ({u}, {v}) references an unknown node")
        a, b = index[u], index[v]
        normalized.add((min(a, b), max(a, b)))
    lines = [f"n {len(index)}"]
    lines.extend(f"{u} {v}" for u, v in sorted(normalized))
    path.write_text("\n".join(lines) + "\n", encoding="ascii")
    return len(index), len(normalized)


def build_qaoa_maxcut_graphstate(
    num_qubits: int,
    out_path: Path | str,
    beta: float = DEFAULT_BETA,
    gamma: float = DEFAULT_GAMMA,
) -> CorpusEntry:
    """Compile one depth-one QAOA MAX-CUT instance on K_{num_qubits} and
    write its optimized graph state as an edge list."""
    if num_qubits < 2:
        raise ValueError(f"need at least 2 qubits, got {num_qubits}")
    graphix_mod = _import_graphix()
    out_path = Path(out_path)
    circuit = _qaoa_maxcut_circuit(graphix_mod, num_qubits, beta, gamma)
    try:
        nodes, edges = _compile_to_graph(circuit)
    except Exception as exc:
        raise RuntimeError(
            f"compilation failed for QAOA MAX-CUT on K_{num_qubits} "
            f"(beta={beta}, gamma={gamma}): {exc}"
        ) from exc
    vertices, edge_count = write_graph_edges(nodes, edges, out_path)
    return CorpusEntry(
        source_qubits=num_qubits,
        compiled_vertices=vertices,
        compiled_edges=edge_count,
        path=out_path,
        metadata={
            "compiler": "graphix",
            "compiler_version": getattr(graphix_mod, "__version__", "unknown"),
            "beta": beta,
            "gamma": gamma,
            "circuit": f"QAOA MAX-CUT p=1 on K_{num_qubits}",
        },
    )


def build_corpus(
    sizes: Sequence[int],
    out_dir: Path | str,
    beta: float = DEFAULT_BETA,
    gamma: float = DEFAULT_GAMMA,
) -> Path:
    """Build one entry per size into ``out_dir`` and write manifest.csv.

    Per-entry failures are recorded in the manifest's error column and the
    remaining sizes still build.  Returns the manifest path.
    """
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    manifest_path = out_dir / "manifest.csv"
    with open(manifest_path, "w", encoding="ascii", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(MANIFEST_COLUMNS)
        for size in sizes:
            target = out_dir / f"qaoa_maxcut_{size:04d}.el"
            try:
                entry = build_qaoa_maxcut_graphstate(size, target, beta, gamma)
            except Exception as exc:  # recorded; corpus continues
                writer.writerow([size, "", "", str(target), "", "", beta, gamma, str(exc)])
                continue
            writer.writerow(
                [
                    entry.source_qubits,
                    entry.compiled_vertices,
                    entry.compiled_edges,
                    str(entry.path),
                    entry.metadata["compiler"],
                    entry.metadata["compiler_version"],
                    beta,
                    gamma,
                    "",
                ]
            )
    return manifest_path

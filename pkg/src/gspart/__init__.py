"""gspart: partition graphs for distributed graph-state generation.

Minimizes the Bell pairs needed to entangle a graph state across multiple
QPUs: partition with the bury heuristic (or baselines), score partitions by
pairwise maximum matchings and GF(2) cut rank, and verify the grafting
generation protocol with an edge-level graph-state simulator.
"""

from .fileio import (
    ParseError,
    read_edge_list,
    read_partition_file,
    write_edge_list,
    write_metis_graph,
    write_partition_file,
)
from .gf2 import BitMatrix, biadjacency, rank_gf2
from .graphs import (
    Graph,
    Partition,
    default_capacities,
    gen_erdos_renyi,
    gen_grid,
    gen_near_square_grid,
    gen_random_regular,
)
from .graphstate import GraphState
from .matching import (
    BipartiteCrossGraph,
    MatchingResult,
    brute_force_matching,
    cross_graph,
    hopcroft_karp,
)
from .metrics import (
    OBJECTIVES,
    MetricsReport,
    cut_edges,
    cutrank_sum,
    evaluate,
    matching_sum,
)
from .partitioners import (
    BuryState,
    bury_bipartition,
    bury_kpartition,
    bury_seeding,
    exhaustive_optimum,
    kernighan_lin,
    random_sampling,
)
from .vcg import VcgTrace, graft_star, parse_trace, replay_trace, run_vcg

__version__ = "0.1.0"

__all__ = [
    "BipartiteCrossGraph",
    "BitMatrix",
    "BuryState",
    "Graph",
    "GraphState",
    "MatchingResult",
    "MetricsReport",
    "OBJECTIVES",
    "ParseError",
    "Partition",
    "VcgTrace",
    "biadjacency",
    "brute_force_matching",
    "bury_bipartition",
    "bury_kpartition",
    "bury_seeding",
    "cross_graph",
    "cut_edges",
    "cutrank_sum",
    "default_capacities",
    "evaluate",
    "exhaustive_optimum",
    "gen_erdos_renyi",
    "gen_grid",
    "gen_near_square_grid",
    "gen_random_regular",
    "graft_star",
    "hopcroft_karp",
    "kernighan_lin",
    "matching_sum",
    "parse_trace",
    "rank_gf2",
    "read_edge_list",
    "read_partition_file",
    "replay_trace",
    "run_vcg",
    "random_sampling",
    "write_edge_list",
    "write_metis_graph",
    "write_partition_file",
    "__version__",
]

"""Round-trip with an external partitioner through files.

gspart does not reimplement METIS; instead it writes the standard METIS
.graph format and evaluates whatever partition file the external tool
produces (one color per line).  This script fakes the external step so it
runs anywhere, but the file formats are the real interface.
"""

import tempfile
from pathlib import Path

from gspart import (
    evaluate,
    gen_grid,
    read_edge_list,
    read_partition_file,
    write_edge_list,
    write_metis_graph,
)

g = gen_grid(6, 6)
workdir = Path(tempfile.mkdtemp(prefix="gspart_demo_"))

# 1. export both formats
(workdir / "grid.el").write_text(write_edge_list(g), encoding="ascii")
(workdir / "grid.graph").write_text(write_metis_graph(g), encoding="ascii")
print("wrote", workdir / "grid.el")
print("wrote", workdir / "grid.graph", "(feed this to e.g. `gpmetis grid.graph 3`)")

# 2. pretend an external tool partitioned the grid into three vertical bands;
#    its output format is one color per vertex line
fake_external = "".join(f"{(v % 6) // 2}\n" for v in range(g.n))
(workdir / "grid.graph.part.3").write_text(fake_external, encoding="ascii")

# 3. read both files back and evaluate the external partition
g_back = read_edge_list((workdir / "grid.el").read_text(encoding="ascii"))
assert g_back == g
p = read_partition_file(
    (workdir / "grid.graph.part.3").read_text(encoding="ascii"), k=3, expected_n=g.n
)
report = evaluate(g, p)
print("\nexternal partition scored:")
print("  cut edges   ", report.cut_edges)
print("  matching sum", report.matching_sum)
print("  cut rank sum", report.cutrank_sum)
print("\nsame thing from the command line:")
print(f"  gspart eval -i {workdir}/grid.el -p {workdir}/grid.graph.part.3")

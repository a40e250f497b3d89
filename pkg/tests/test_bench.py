import csv
import io

import pytest

from gspart.bench import (
    CSV_COLUMNS,
    BenchSpec,
    derive_seed,
    parse_algorithm,
    run_algorithm,
    run_bench,
)
from gspart import gen_grid, matching_sum


class TestDeriveSeed:
    def test_stable_across_calls(self):
        assert derive_seed(1, "graph", 50, 0) == derive_seed(1, "graph", 50, 0)

    def test_distinct_roles_differ(self):
        assert derive_seed(1, "graph", 50, 0) != derive_seed(1, "algo", 50, 0)

    def test_pinned_value(self):
        # freezes the derivation format; changing it would silently reshuffle
        # every published benchmark
        assert derive_seed(0, "x") == 7919274910726248567


class TestParseAlgorithm:
    @pytest.mark.parametrize(
        "spec,expected",
        [
            ("bury", ("bury", None)),
            ("kl", ("kl", None)),
            ("random:100", ("random", 100)),
            ("bury-seed:3", ("bury-seed", 3)),
        ],
    )
    def test_valid(self, spec, expected):
        assert parse_algorithm(spec) == expected

    @pytest.mark.parametrize(
        "spec", ["metis", "random", "random:x", "random:0", "bury:3", "kl:2", "bury-seed"]
    )
    def test_invalid(self, spec):
        with pytest.raises(ValueError):
            parse_algorithm(spec)


class TestBenchSpec:
    def test_missing_algorithms(self):
        with pytest.raises(ValueError, match="algorithm"):
            BenchSpec(family="grid", sizes=(16,), algorithms=())

    def test_regular_needs_degree(self):
        with pytest.raises(ValueError, match="degree"):
            BenchSpec(family="regular", sizes=(16,))

    def test_er_needs_probability(self):
        with pytest.raises(ValueError, match="probability"):
            BenchSpec(family="erdos-renyi", sizes=(16,))

    def test_file_needs_inputs(self):
        with pytest.raises(ValueError, match="input"):
            BenchSpec(family="file")

    def test_unknown_family(self):
        with pytest.raises(ValueError, match="family"):
            BenchSpec(family="torus", sizes=(16,))


class TestRunAlgorithm:
    def test_dispatch(self):
        g = gen_grid(4, 4)
        for spec in ("bury", "kl", "random:5", "bury-seed:0"):
            p = run_algorithm(spec, g, 2, seed=1)
            assert p.counts() == (8, 8)


def _rows(spec: BenchSpec) -> list[dict]:
    buf = io.StringIO()
    run_bench(spec, buf)
    return list(csv.DictReader(io.StringIO(buf.getvalue())))


class TestRunBench:
    def test_row_count_and_schema(self):
        spec = BenchSpec(
            family="grid",
            sizes=(9, 16),
            k_list=(2, 3),
            algorithms=("bury", "random:5"),
            samples=2,
            rng_seed=7,
        )
        rows = _rows(spec)
        assert len(rows) == 2 * 2 * 2 * 2
        assert list(rows[0]) == CSV_COLUMNS
        for row in rows:
            assert row["error"] == ""
            assert int(row["cutrank_sum"]) <= int(row["matching_sum"]) <= int(row["cut_edges"])

    def test_deterministic_modulo_wall_time(self):
        spec = BenchSpec(
            family="regular",
            sizes=(20,),
            degree=3,
            algorithms=("bury", "kl"),
            samples=3,
            rng_seed=5,
        )
        def strip(spec):
            return [
                {k: v for k, v in row.items() if k != "wall_time_ms"}
                for row in _rows(spec)
            ]
        assert strip(spec) == strip(spec)

    def test_adding_algorithm_keeps_graph_seeds(self):
        base = BenchSpec(
            family="regular", sizes=(20,), degree=3, algorithms=("bury",), samples=2
        )
        extended = BenchSpec(
            family="regular",
            sizes=(20,),
            degree=3,
            algorithms=("bury", "kl"),
            samples=2,
        )
        bury_rows = [r for r in _rows(extended) if r["algorithm"] == "bury"]
        assert [
            {k: v for k, v in row.items() if k != "wall_time_ms"} for row in bury_rows
        ] == [
            {k: v for k, v in row.items() if k != "wall_time_ms"} for row in _rows(base)
        ]

    def test_erdos_renyi_family(self):
        spec = BenchSpec(
            family="erdos-renyi",
            sizes=(20,),
            edge_prob=0.2,
            algorithms=("bury",),
            samples=2,
        )
        rows = _rows(spec)
        assert len(rows) == 2 and all(r["error"] == "" for r in rows)

    def test_file_family(self, tmp_path):
        from gspart import write_edge_list

        path = tmp_path / "g.el"
        path.write_text(write_edge_list(gen_grid(3, 3)), encoding="ascii")
        spec = BenchSpec(family="file", inputs=(str(path),), algorithms=("bury",))
        rows = _rows(spec)
        assert len(rows) == 1 and rows[0]["n"] == "9"

    def test_bad_file_records_error_and_continues(self, tmp_path):
        from gspart import write_edge_list

        good = tmp_path / "good.el"
        good.write_text(write_edge_list(gen_grid(3, 3)), encoding="ascii")
        spec = BenchSpec(
            family="file",
            inputs=(str(tmp_path / "missing.el"), str(good)),
            algorithms=("bury",),
        )
        rows = _rows(spec)
        assert len(rows) == 2
        assert rows[0]["error"] != ""
        assert rows[1]["error"] == "" and rows[1]["n"] == "9"

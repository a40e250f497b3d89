import random

import pytest

from gspart import (
    Graph,
    Partition,
    default_capacities,
    gen_erdos_renyi,
    gen_grid,
    gen_near_square_grid,
    gen_random_regular,
)


class TestGraph:
    def test_basic_accessors(self):
        g = Graph(4, [(0, 1), (1, 2), (0, 2)])
        assert g.n == 4
        assert g.m == 3
        assert g.neighbors(1) == (0, 2)
        assert g.degree(3) == 0
        assert g.has_edge(0, 2) and not g.has_edge(0, 3)
        assert list(g.edges()) == [(0, 1), (0, 2), (1, 2)]

    def test_symmetry_on_random_graphs(self):
        rng = random.Random(7)
        for _ in range(25):
            g = gen_erdos_renyi(rng.randint(1, 30), rng.random(), rng.getrandbits(32))
            for u in range(g.n):
                for v in g.neighbors(u):
                    assert u in g.neighbors(v)
                assert u not in g.neighbors(u)
            assert sum(g.degree(v) for v in range(g.n)) == 2 * g.m

    def test_rejects_self_loop(self):
        with pytest.raises(ValueError, match="self-loop"):
            Graph(3, [(1, 1)])

    def test_rejects_duplicate_edge(self):
        with pytest.raises(ValueError, match="duplicate"):
            Graph(3, [(0, 1), (1, 0)])

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError, match="out of range"):
            Graph(2, [(0, 2)])

    def test_equality_and_hash(self):
        a = Graph(3, [(0, 1), (1, 2)])
        b = Graph(3, [(1, 2), (0, 1)])
        assert a == b and hash(a) == hash(b)
        assert a != Graph(3, [(0, 1)])


class TestGrid:
    def test_single_vertex(self):
        g = gen_grid(1, 1)
        assert g.n == 1 and g.m == 0

    def test_4x4_degree_profile(self):
        g = gen_grid(4, 4)
        assert g.n == 16
        degrees = sorted(g.degree(v) for v in range(16))
        assert degrees.count(2) == 4
        assert degrees.count(3) == 8
        assert degrees.count(4) == 4

    def test_2x3_edge_count_formula(self):
        rows, cols = 2, 3
        g = gen_grid(rows, cols)
        assert g.n == 6
        assert g.m == rows * (cols - 1) + cols * (rows - 1) == 7

    @pytest.mark.parametrize("rows,cols", [(2, 2), (3, 5), (6, 6)])
    def test_degree_range_and_corners(self, rows, cols):
        g = gen_grid(rows, cols)
        degrees = [g.degree(v) for v in range(g.n)]
        assert set(degrees) <= {2, 3, 4}
        assert degrees.count(2) == 4

    def test_invalid_dims(self):
        with pytest.raises(ValueError):
            gen_grid(0, 3)


class TestNearSquareGrid:
    def test_perfect_square(self):
        assert gen_near_square_grid(36) == gen_grid(6, 6)

    def test_prime_is_path(self):
        assert gen_near_square_grid(7) == gen_grid(1, 7)

    def test_rectangular(self):
        assert gen_near_square_grid(12) == gen_grid(3, 4)


class TestRandomRegular:
    def test_k4_is_forced(self):
        g = gen_random_regular(4, 3, rng_seed=0)
        assert g.m == 6
        assert all(g.degree(v) == 3 for v in range(4))

    def test_degree_postcondition(self):
        g = gen_random_regular(10, 3, rng_seed=1)
        assert all(g.degree(v) == 3 for v in range(10))

    def test_structural_validation_over_seeds(self):
        for seed in range(50):
            g = gen_random_regular(50, 6, rng_seed=seed)
            assert g.n == 50 and g.m == 150
            assert all(g.degree(v) == 6 for v in range(50))

    def test_deterministic(self):
        assert gen_random_regular(20, 3, 9) == gen_random_regular(20, 3, 9)

    def test_infeasible_parameters(self):
        with pytest.raises(ValueError):
            gen_random_regular(5, 3, 0)
        with pytest.raises(ValueError):
            gen_random_regular(4, 4, 0)


class TestErdosRenyi:
    def test_extremes(self):
        assert gen_erdos_renyi(5, 0.0, 1).m == 0
        assert gen_erdos_renyi(5, 1.0, 1).m == 10

    def test_deterministic(self):
        assert gen_erdos_renyi(30, 0.2, 5) == gen_erdos_renyi(30, 0.2, 5)


class TestPartition:
    def test_default_capacities(self):
        assert default_capacities(36, 5) == (8, 7, 7, 7, 7)
        assert default_capacities(36, 3) == (12, 12, 12)
        rng = random.Random(3)
        for _ in range(50):
            n, k = rng.randint(1, 100), rng.randint(1, 10)
            caps = default_capacities(n, k)
            assert sum(caps) == n and max(caps) - min(caps) <= 1

    def test_counts_and_balance(self):
        p = Partition((0, 0, 1, 1), 2)
        assert p.counts() == (2, 2)
        assert p.capacities == (2, 2)
        assert p.is_balanced()
        assert p.part(1) == (2, 3)

    def test_color_out_of_range(self):
        with pytest.raises(ValueError, match="color"):
            Partition((0, 2), 2)

    def test_capacity_sum_mismatch(self):
        with pytest.raises(ValueError, match="capacities"):
            Partition((0, 1), 2, (1, 2))

import random

import pytest

from gspart import (
    BipartiteCrossGraph,
    Partition,
    brute_force_matching,
    cross_graph,
    gen_erdos_renyi,
    hopcroft_karp,
)
from _util import complete_graph, path_graph, star_graph


def check_konig(bg: BipartiteCrossGraph, result) -> None:
    """Matching is vertex-disjoint, |cover| == |matching|, cover hits all edges."""
    used = set()
    for u, v in result.matching:
        assert u not in used and v not in used
        used.update((u, v))
    assert len(result.cover) == len(result.matching)
    for u, v in bg.edge_ids():
        assert u in result.cover or v in result.cover


def random_cross_instance(rng: random.Random, max_edges: int = 20):
    """Random bipartite cross graph built the honest way, via a partition."""
    while True:
        n = rng.randint(2, 12)
        g = gen_erdos_renyi(n, rng.uniform(0.1, 0.6), rng.getrandbits(32))
        colors = tuple(rng.randint(0, 1) for _ in range(n))
        if len(set(colors)) < 2:
            continue
        bg = cross_graph(g, Partition(colors, 2), 0, 1)
        if len(bg.edges) <= max_edges:
            return bg


class TestCrossGraph:
    def test_p2_split(self):
        bg = cross_graph(path_graph(2), Partition((0, 1), 2), 0, 1)
        assert bg.left == (0,) and bg.right == (1,)
        assert bg.edges == frozenset({(0, 0)})

    def test_k4_half_split_is_biclique(self):
        bg = cross_graph(complete_graph(4), Partition((0, 0, 1, 1), 2), 0, 1)
        assert len(bg.edges) == 4
        assert bg.edge_ids() == {(0, 2), (0, 3), (1, 2), (1, 3)}

    def test_empty_cut(self):
        g = path_graph(4)
        p = Partition((0, 0, 1, 1), 3)  # color 2 unused
        bg = cross_graph(g, p, 0, 2)
        assert bg.edges == frozenset() and bg.left == () and bg.right == ()

    def test_orientation_follows_colors(self):
        # vertex colors interleaved: left must hold color-a vertices only
        g = path_graph(4)
        bg = cross_graph(g, Partition((0, 1, 0, 1), 2), 0, 1)
        assert bg.left == (0, 2) and bg.right == (1, 3)

    def test_invalid_colors(self):
        g = path_graph(2)
        p = Partition((0, 1), 2)
        with pytest.raises(ValueError):
            cross_graph(g, p, 0, 0)
        with pytest.raises(ValueError):
            cross_graph(g, p, 0, 2)


class TestHopcroftKarp:
    def test_star_cover_is_center(self):
        g = star_graph(3)
        p = Partition((0, 1, 1, 1), 2)
        bg = cross_graph(g, p, 0, 1)
        result = hopcroft_karp(bg)
        assert result.size == 1
        assert result.cover == frozenset({0})

    def test_four_cycle_perfect_matching(self):
        from gspart import Graph

        g = Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
        bg = cross_graph(g, Partition((0, 0, 1, 1), 2), 0, 1)
        result = hopcroft_karp(bg)
        assert result.size == 2 == brute_force_matching(bg)
        check_konig(bg, result)

    def test_empty(self):
        bg = BipartiteCrossGraph((), (), frozenset())
        result = hopcroft_karp(bg)
        assert result.size == 0 and result.cover == frozenset()

    def test_deterministic(self):
        rng = random.Random(23)
        bg = random_cross_instance(rng)
        assert hopcroft_karp(bg) == hopcroft_karp(bg)

    def test_agrees_with_brute_force(self):
        rng = random.Random(29)
        for _ in range(300):
            bg = random_cross_instance(rng)
            result = hopcroft_karp(bg)
            assert result.size == brute_force_matching(bg)
            assert result.size <= min(len(bg.left), len(bg.right))
            assert result.size <= len(bg.edges)
            check_konig(bg, result)


class TestBruteForce:
    def test_k22(self):
        bg = cross_graph(complete_graph(4), Partition((0, 0, 1, 1), 2), 0, 1)
        assert brute_force_matching(bg) == 2

    def test_alternating_path(self):
        # P4 colored alternately: three cross edges sharing middle vertices
        bg = cross_graph(path_graph(4), Partition((0, 1, 0, 1), 2), 0, 1)
        assert len(bg.edges) == 3
        assert brute_force_matching(bg) == 2

    def test_single_edge(self):
        bg = cross_graph(path_graph(2), Partition((0, 1), 2), 0, 1)
        assert brute_force_matching(bg) == 1

    def test_size_limit(self):
        bg = cross_graph(complete_graph(10), Partition((0,) * 5 + (1,) * 5, 2), 0, 1)
        assert len(bg.edges) == 25
        with pytest.raises(ValueError, match="oracle"):
            brute_force_matching(bg)

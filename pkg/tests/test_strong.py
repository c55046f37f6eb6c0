import pytest

from oracles import line_graph_distance, literal_sc_all_subsets
from strongclique.generators import (
    c5_blowup,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    path_graph,
    random_graph,
    star_graph,
)
from strongclique.graph import INFINITY, build_graph, delete
from strongclique.strong import (
    brute_force_sc,
    conflict_graph,
    edge_distance,
    is_strong_clique,
    strong_clique_number,
)


class TestEdgeDistance:
    def test_same_edge(self):
        assert edge_distance(path_graph(4), 1, 1) == 0

    def test_shared_endpoint(self):
        assert edge_distance(path_graph(4), 0, 1) == 1

    def test_hexagon_opposite_edges(self):
        # The line graph of a hexagon is a hexagon again.
        assert edge_distance(cycle_graph(6), 0, 3) == 3

    def test_across_components(self):
        g = build_graph(4, [(0, 1), (2, 3)])
        assert edge_distance(g, 0, 1) == INFINITY

    def test_invalid_id(self):
        with pytest.raises(ValueError):
            edge_distance(path_graph(3), 0, 5)

    def test_matches_line_graph_bfs(self, labeled5):
        for g in labeled5:
            if g.m == 0 or g.m > 7:
                continue
            for e in range(g.m):
                for f in range(g.m):
                    assert edge_distance(g, e, f) == line_graph_distance(g, e, f)


class TestIsStrongClique:
    def test_whole_pentagon(self):
        ok, violation = is_strong_clique(cycle_graph(5), range(5))
        assert ok and violation is None

    def test_hexagon_fails_with_first_pair(self):
        ok, violation = is_strong_clique(cycle_graph(6), range(6))
        assert not ok
        assert violation == (0, 3)
        assert edge_distance(cycle_graph(6), *violation) > 2

    def test_single_edge(self):
        ok, _ = is_strong_clique(path_graph(2), [0])
        assert ok

    def test_invalid_id(self):
        with pytest.raises(ValueError):
            is_strong_clique(path_graph(3), [4])


class TestConflictGraph:
    def test_hexagon_gives_octahedron(self):
        cg = conflict_graph(cycle_graph(6))
        assert cg.n == 6 and cg.m == 12
        # Complete minus a perfect matching: each vertex misses exactly one.
        assert all(cg.degree(v) == 4 for v in range(6))
        assert strong_clique_number(cycle_graph(6))[0] == 3

    def test_star_gives_complete(self):
        cg = conflict_graph(star_graph(5))
        assert cg.n == 5 and cg.m == 10

    def test_edgeless(self):
        cg = conflict_graph(build_graph(3, []))
        assert cg.n == 0 and cg.m == 0

    def test_adjacency_matches_distance(self, labeled5):
        for g in labeled5:
            if g.m > 7:
                continue
            cg = conflict_graph(g)
            for e in range(g.m):
                for f in range(e + 1, g.m):
                    assert cg.has_edge(e, f) == (edge_distance(g, e, f) <= 2)


class TestStrongCliqueNumber:
    def test_pentagon(self):
        assert strong_clique_number(cycle_graph(5))[0] == 5

    def test_hexagon(self):
        assert strong_clique_number(cycle_graph(6))[0] == 3
        assert brute_force_sc(cycle_graph(6)) == 3

    def test_k33_meets_degree_square(self):
        assert strong_clique_number(complete_bipartite(3, 3))[0] == 9

    def test_edgeless(self):
        size, witness = strong_clique_number(build_graph(4, []))
        assert size == 0 and witness.edges == ()

    def test_star_exactness(self):
        for n in range(1, 11):
            assert strong_clique_number(star_graph(n))[0] == n

    def test_witness_always_valid(self, labeled5):
        for g in labeled5:
            size, witness = strong_clique_number(g)
            assert len(witness.edges) == size
            assert is_strong_clique(g, witness.edges)[0]

    def test_oracle_equivalence_exhaustive_small(self, labeled5):
        for g in labeled5:
            assert strong_clique_number(g)[0] == brute_force_sc(g)

    def test_monotone_under_edge_deletion(self):
        graphs = [random_graph(n, p, seed) for n in (6, 7) for p in (0.3, 0.5) for seed in range(10)]
        for g in graphs:
            sc = strong_clique_number(g)[0]
            for e in range(g.m):
                smaller = delete(g, edges=[e]).graph
                assert strong_clique_number(smaller)[0] <= sc

    def test_bipartite_ceiling(self, corpus6):
        for entry in corpus6:
            if entry.bipartite:
                assert entry.sc <= entry.delta**2

    def test_blowup(self):
        assert strong_clique_number(c5_blowup(2))[0] == 20


class TestBruteForce:
    def test_matches_literal_subset_scan(self, labeled5):
        # The enumeration oracle itself is pinned by a literal 2^m scan
        # over the line-graph metric on every tiny graph.
        for g in labeled5:
            if g.m > 9:
                continue
            assert brute_force_sc(g) == literal_sc_all_subsets(g)

    def test_two_disjoint_edges(self):
        assert brute_force_sc(build_graph(4, [(0, 1), (2, 3)])) == 1

    def test_path4(self):
        assert brute_force_sc(path_graph(4)) == 3

    def test_cap(self):
        with pytest.raises(ValueError, match="brute"):
            brute_force_sc(complete_graph(7))

import math

import pytest

from strongclique.cycles import find_cycle_of_length
from strongclique.generators import (
    complete_graph,
    cycle_graph,
    enumerate_graphs,
    path_graph,
    random_graph,
    star_graph,
)
from strongclique.graph import (
    INFINITY,
    bipartition,
    build_graph,
    delete,
    edge_induced_subgraph,
    from_edgelist,
    from_graph6,
    max_degree,
    to_edgelist,
    to_graph6,
    vertex_distance,
)


class TestBuildGraph:
    def test_empty_edge_set(self):
        g = build_graph(3, [])
        assert g.n == 3 and g.m == 0

    def test_triangle(self):
        g = build_graph(3, [(0, 1), (1, 2), (0, 2)])
        assert g.m == 3
        assert max_degree(g) == 2

    def test_loop_rejected(self):
        with pytest.raises(ValueError, match="loop"):
            build_graph(2, [(0, 0)])

    def test_out_of_range_rejected(self):
        with pytest.raises(ValueError, match="out of range"):
            build_graph(2, [(0, 2)])
        with pytest.raises(ValueError, match="out of range"):
            build_graph(2, [(-1, 0)])

    def test_duplicate_rejected(self):
        with pytest.raises(ValueError, match="duplicate"):
            build_graph(3, [(0, 1), (1, 0)])

    def test_edge_ids_follow_input_order(self):
        g = build_graph(4, [(2, 3), (0, 1)])
        assert g.edges == ((2, 3), (0, 1))
        assert g.edge_id(1, 0) == 1

    def test_degree_sum_is_twice_edges(self, labeled5):
        for g in labeled5:
            assert sum(g.degree(v) for v in range(g.n)) == 2 * g.m


class TestMaxDegree:
    def test_cycle_is_2_regular(self):
        assert max_degree(cycle_graph(5)) == 2

    def test_star_center(self):
        assert max_degree(star_graph(7)) == 7

    def test_complete(self):
        assert max_degree(complete_graph(4)) == 3


class TestBipartition:
    def test_even_cycle(self):
        parts = bipartition(cycle_graph(6))
        assert parts is not None
        assert sorted(map(len, parts)) == [3, 3]

    def test_odd_cycle_absent(self):
        assert bipartition(cycle_graph(5)) is None

    def test_path(self):
        parts = bipartition(path_graph(4))
        assert parts is not None
        assert sorted(map(len, parts)) == [2, 2]

    def test_lowest_vertex_goes_left(self):
        parts = bipartition(path_graph(4))
        assert 0 in parts[0]

    def test_every_edge_crosses(self, labeled5):
        for g in labeled5:
            parts = bipartition(g)
            if parts is None:
                continue
            x, y = parts
            for u, v in g.edges:
                assert (u in x) != (v in x)
            assert x | y == set(range(g.n))

    def test_matches_odd_cycle_detection(self, labeled5):
        # Cross-module: 2-colorable iff no odd cycle subgraph exists.
        for g in labeled5:
            has_odd = any(
                find_cycle_of_length(g, length) is not None
                for length in range(3, g.n + 1, 2)
            )
            assert (bipartition(g) is None) == has_odd


class TestVertexDistance:
    def test_hexagon_antipodes(self):
        assert vertex_distance(cycle_graph(6), 0, 3) == 3

    def test_self_distance(self):
        assert vertex_distance(cycle_graph(6), 2, 2) == 0

    def test_components_are_infinitely_far(self):
        g = build_graph(4, [(0, 1), (2, 3)])
        assert vertex_distance(g, 0, 3) == INFINITY
        assert math.isinf(vertex_distance(g, 1, 2))

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            vertex_distance(cycle_graph(4), 0, 9)


class TestEdgeInducedSubgraph:
    def test_full_edge_set_keeps_cycle(self):
        g = cycle_graph(5)
        proj = edge_induced_subgraph(g, range(5))
        assert proj.graph.n == 5 and proj.graph.m == 5

    def test_alternating_hexagon_matching(self):
        g = cycle_graph(6)
        proj = edge_induced_subgraph(g, [0, 2, 4])
        assert proj.graph.n == 6 and proj.graph.m == 3
        assert all(proj.graph.degree(v) == 1 for v in range(6))

    def test_empty_set(self):
        proj = edge_induced_subgraph(cycle_graph(4), [])
        assert proj.graph.n == 0 and proj.graph.m == 0

    def test_isolated_vertices_dropped(self, labeled5):
        for g in labeled5:
            proj = edge_induced_subgraph(g, range(g.m))
            isolated = sum(1 for v in range(g.n) if g.degree(v) == 0)
            assert proj.graph.m == g.m
            assert proj.graph.n == g.n - isolated

    def test_invalid_edge_id(self):
        with pytest.raises(ValueError, match="out of range"):
            edge_induced_subgraph(cycle_graph(4), [7])


class TestDelete:
    def test_cycle_minus_edge_is_path(self):
        proj = delete(cycle_graph(5), edges=[0])
        assert proj.graph.n == 5 and proj.graph.m == 4
        degrees = sorted(proj.graph.degree(v) for v in range(5))
        assert degrees == [1, 1, 2, 2, 2]

    def test_complete_minus_vertex(self):
        proj = delete(complete_graph(4), vertices=[0])
        assert proj.graph == complete_graph(3)

    def test_delete_nothing_is_identity(self):
        g = build_graph(4, [(1, 3), (0, 2), (0, 1)])
        proj = delete(g)
        assert proj.graph == g
        assert proj.edge_map == {0: 0, 1: 1, 2: 2}

    def test_maps_are_consistent(self):
        g = build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
        proj = delete(g, vertices=[2])
        assert proj.vertex_map == {0: 0, 1: 1, 3: 2, 4: 3}
        assert set(proj.edge_map) == {0, 3}
        for old, new in proj.edge_map.items():
            u, v = g.edges[old]
            assert proj.graph.edges[new] == (
                proj.vertex_map[u],
                proj.vertex_map[v],
            )

    def test_invalid_ids(self):
        with pytest.raises(ValueError):
            delete(cycle_graph(4), vertices=[9])
        with pytest.raises(ValueError):
            delete(cycle_graph(4), edges=[9])


class TestGraph6:
    def test_known_encodings(self):
        assert to_graph6(cycle_graph(5)) == "Dhc"
        assert to_graph6(build_graph(0, [])) == "?"
        assert to_graph6(complete_graph(2)) == "A_"

    def test_header_accepted(self):
        g = from_graph6(">>graph6<<Dhc")
        assert g.n == 5 and g.m == 5

    def test_foreign_header_rejected(self):
        with pytest.raises(ValueError, match="header"):
            from_graph6(">>sparse6<<:Dhc")

    def test_garbage_rejected(self):
        with pytest.raises(ValueError):
            from_graph6("D hc")
        with pytest.raises(ValueError):
            from_graph6("Dh")
        with pytest.raises(ValueError):
            from_graph6("")

    def test_large_n_three_byte_form(self):
        g = path_graph(63)
        again = from_graph6(to_graph6(g))
        assert again.n == 63
        assert sorted(again.edges) == sorted(g.edges)

    def test_roundtrip_exhaustive_small(self, labeled5):
        for g in labeled5:
            back = from_graph6(to_graph6(g))
            assert back.n == g.n
            assert sorted(back.edges) == sorted(g.edges)

    @pytest.mark.parametrize("n", [6, 7, 8])
    def test_roundtrip_sampled(self, n):
        for seed in range(60):
            g = random_graph(n, 0.2 + 0.2 * (seed % 3), seed)
            back = from_graph6(to_graph6(g))
            assert back.n == g.n
            assert sorted(back.edges) == sorted(g.edges)


class TestEdgelist:
    def test_roundtrip_exhaustive_small(self, labeled5):
        for g in labeled5:
            back = from_edgelist(to_edgelist(g))
            assert back.n == g.n
            assert sorted(back.edges) == sorted(g.edges)

    def test_comments_and_blanks(self):
        text = "# a triangle\n3 3\n\n0 1\n# middle\n1 2\n0 2\n"
        g = from_edgelist(text)
        assert g.n == 3 and g.m == 3

    def test_error_carries_line_number(self):
        with pytest.raises(ValueError, match="line 2"):
            from_edgelist("3 1\nnot an edge\n")

    def test_wrong_edge_count(self):
        with pytest.raises(ValueError, match="expected 2 edge lines"):
            from_edgelist("3 2\n0 1\n")

    def test_invalid_edges_reported(self):
        with pytest.raises(ValueError, match="loop"):
            from_edgelist("3 1\n1 1\n")

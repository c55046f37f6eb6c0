import pytest

from oracles import has_cycle_subgraph
from strongclique.cycles import find_cycle_of_length, girth, is_free
from strongclique.generators import (
    c5_blowup,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    path_graph,
    petersen_graph,
    random_graph,
)
from strongclique.graph import INFINITY, build_graph


class TestFindCycle:
    def test_hexagon_found(self):
        witness = find_cycle_of_length(cycle_graph(6), 6)
        assert witness is not None
        assert witness.length == 6
        witness.validate(cycle_graph(6))

    def test_hexagon_has_no_square(self):
        assert find_cycle_of_length(cycle_graph(6), 4) is None

    def test_petersen(self):
        g = petersen_graph()
        assert find_cycle_of_length(g, 3) is None
        assert find_cycle_of_length(g, 4) is None
        five = find_cycle_of_length(g, 5)
        assert five is not None
        five.validate(g)

    def test_length_below_three_rejected(self):
        with pytest.raises(ValueError, match="at least 3"):
            find_cycle_of_length(cycle_graph(4), 2)

    def test_chords_allowed(self):
        # A complete graph contains cycles of every length up to n.
        g = complete_graph(5)
        for length in (3, 4, 5):
            witness = find_cycle_of_length(g, length)
            assert witness is not None and witness.length == length

    def test_oracle_equivalence_exhaustive(self, labeled5):
        for g in labeled5:
            for length in range(3, 6):
                found = find_cycle_of_length(g, length)
                assert (found is not None) == has_cycle_subgraph(g, length)
                if found is not None:
                    found.validate(g)

    def test_oracle_equivalence_sampled(self):
        for seed in range(40):
            n = 6 + seed % 2
            g = random_graph(n, 0.2 + 0.2 * (seed % 3), seed)
            for length in range(3, n + 1):
                found = find_cycle_of_length(g, length)
                assert (found is not None) == has_cycle_subgraph(g, length)

    def test_anchor_is_smallest(self):
        witness = find_cycle_of_length(complete_graph(6), 4)
        assert witness is not None
        assert witness.vertices[0] == 0 == min(witness.vertices)


class TestIsFree:
    def test_blowup_contains_square(self):
        free, witness = is_free(c5_blowup(2), [4])
        assert not free
        assert witness is not None and witness.length == 4

    def test_k24_is_hexagon_free(self):
        free, witness = is_free(complete_bipartite(2, 4), [6])
        assert free and witness is None

    def test_forest_is_free_of_everything(self):
        g = path_graph(7)
        free, _ = is_free(g, range(3, 8))
        assert free

    def test_reports_smallest_violated_length_first(self):
        free, witness = is_free(complete_graph(5), [5, 3])
        assert not free and witness.length == 3


class TestGirth:
    def test_petersen(self):
        assert girth(petersen_graph()) == 5

    def test_complete(self):
        assert girth(complete_graph(4)) == 3

    def test_tree(self):
        assert girth(path_graph(5)) == INFINITY

    def test_exhaustive_against_oracle(self, labeled5):
        for g in labeled5:
            expected = INFINITY
            for length in range(3, g.n + 1):
                if has_cycle_subgraph(g, length):
                    expected = length
                    break
            assert girth(g) == expected


class TestBipartiteConsistency:
    def test_no_odd_cycles_in_bipartite_corpus(self, corpus6):
        for entry in corpus6:
            if entry.bipartite:
                assert not any(length % 2 for length in entry.cycle_lengths)

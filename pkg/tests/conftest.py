import sys
from dataclasses import dataclass
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from strongclique.cycles import find_cycle_of_length
from strongclique.generators import enumerate_graphs
from strongclique.graph import Graph, bipartition, max_degree
from strongclique.strong import strong_clique_number


@dataclass(frozen=True)
class CorpusEntry:
    graph: Graph
    delta: int
    sc: int
    witness: tuple[int, ...]
    bipartite: bool
    cycle_lengths: frozenset[int]


def _stats(graph: Graph) -> CorpusEntry:
    sc, wit = strong_clique_number(graph)
    lengths = frozenset(
        length
        for length in range(3, graph.n + 1)
        if find_cycle_of_length(graph, length) is not None
    )
    return CorpusEntry(
        graph=graph,
        delta=max_degree(graph),
        sc=sc,
        witness=wit.edges,
        bipartite=bipartition(graph) is not None,
        cycle_lengths=lengths,
    )


@pytest.fixture(scope="session")
def corpus6():
    """Every labeled graph on at most 6 vertices with precomputed stats."""
    entries = []
    for n in range(0, 7):
        for graph in enumerate_graphs(n):
            entries.append(_stats(graph))
    return entries


@pytest.fixture(scope="session")
def labeled5():
    """Every labeled graph on at most 5 vertices (cheap corpus)."""
    graphs = []
    for n in range(0, 6):
        graphs.extend(enumerate_graphs(n))
    return graphs

"""Exact detection of cycle subgraphs of a prescribed length.

Cycles are sought as subgraphs (chords are allowed), matching the
freeness notion used by the bound verifier. The search is a depth-first
path extension anchored at the smallest vertex of the would-be cycle,
with a reachability prune on the remaining budget.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .graph import INFINITY, Graph, _bfs_distances


@dataclass(frozen=True)
class CycleWitness:
    """A cycle given as its vertices in cyclic order."""

    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices)

    def validate(self, graph: Graph) -> None:
        verts = self.vertices
        if len(set(verts)) != len(verts):
            raise ValueError("cycle witness repeats a vertex")
        if len(verts) < 3:
            raise ValueError("cycle witness shorter than 3")
        for i, u in enumerate(verts):
            v = verts[(i + 1) % len(verts)]
            if not graph.has_edge(u, v):
                raise ValueError(f"cycle witness misses edge {{{u}, {v}}}")


def find_cycle_of_length(graph: Graph, length: int) -> CycleWitness | None:
    """A cycle subgraph with exactly `length` vertices, or None.

    Deterministic: the returned witness is anchored at the smallest
    possible vertex and follows ascending neighbor order.
    """
    if length < 3:
        raise ValueError("cycle length must be at least 3")
    n = graph.n
    if length > n:
        return None
    adj = graph.adj_bits

    for anchor in range(n - length + 1):
        # The anchor is the smallest vertex on the cycle, which cuts
        # rotational and most mirror symmetry.
        above = ((1 << n) - 1) >> (anchor + 1) << (anchor + 1)
        path = [anchor]
        used = 1 << anchor

        def dfs(current: int) -> bool:
            nonlocal used
            if len(path) == length:
                return bool(adj[current] >> anchor & 1)
            # Remaining-budget prune: the anchor must still be reachable
            # from the current end through unused vertices.
            allowed = (above & ~used) | (1 << current) | (1 << anchor)
            dist = _bfs_distances(graph, current, allowed)
            if dist[anchor] is INFINITY or dist[anchor] > length - len(path) + 1:
                return False
            cand = adj[current] & above & ~used
            while cand:
                b = cand & -cand
                cand ^= b
                w = b.bit_length() - 1
                path.append(w)
                used |= b
                if dfs(w):
                    return True
                path.pop()
                used &= ~b
            return False

        if dfs(anchor):
            witness = CycleWitness(tuple(path))
            witness.validate(graph)
            return witness
    return None


def is_free(
    graph: Graph, lengths: Iterable[int]
) -> tuple[bool, CycleWitness | None]:
    """True iff no cycle of any listed length exists; else the first
    witness (lengths checked in ascending order)."""
    for length in sorted(set(lengths)):
        witness = find_cycle_of_length(graph, length)
        if witness is not None:
            return False, witness
    return True, None


def girth(graph: Graph) -> int | float:
    """Length of a shortest cycle; INFINITY for forests."""
    for length in range(3, graph.n + 1):
        if find_cycle_of_length(graph, length) is not None:
            return length
    return INFINITY

"""Strong cliques: the distance-2 edge metric and exact SC computation.

A strong clique is a set of edges whose pairwise distance in the line
graph is at most 2. SC(G) is computed as a maximum clique of the conflict
graph (the square of the line graph) by branch and bound with a greedy
coloring upper bound; a slower subset-enumeration oracle backs the solver
in tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .graph import INFINITY, Graph, _bfs_distances

_BRUTE_FORCE_EDGE_CAP = 20


@dataclass(frozen=True)
class StrongCliqueWitness:
    """A certified strong clique, as sorted edge ids of the host graph."""

    edges: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.edges)


def edge_distance(graph: Graph, e: int, f: int) -> int | float:
    """Distance between two edges in the line graph of the host.

    0 for the same edge, 1 for edges sharing an endpoint, otherwise one
    more than the closest endpoint pair; INFINITY across components.
    """
    a, b = graph.endpoints(e)
    c, d = graph.endpoints(f)
    if e == f:
        return 0
    if a == c or a == d or b == c or b == d:
        return 1
    dist = _bfs_distances(graph, a, (1 << graph.n) - 1)
    db = _bfs_distances(graph, b, (1 << graph.n) - 1)
    best = min(dist[c], dist[d], db[c], db[d])
    return 1 + best if best is not INFINITY else INFINITY


def _within_two(graph: Graph, e: int, f: int) -> bool:
    # Distance <= 2 needs no BFS: shared endpoint, or a host edge joining
    # an endpoint of e to an endpoint of f.
    a, b = graph.edges[e]
    c, d = graph.edges[f]
    if a == c or a == d or b == c or b == d:
        return True
    joined = graph.adj_bits[a] | graph.adj_bits[b]
    return bool(joined >> c & 1 or joined >> d & 1)


def is_strong_clique(
    graph: Graph, edge_ids: Iterable[int]
) -> tuple[bool, tuple[int, int] | None]:
    """Whether every pair of the given edges is within distance 2.

    On failure also returns the lexicographically first violating pair.
    """
    ids = sorted(set(edge_ids))
    for e in ids:
        if not 0 <= e < graph.m:
            raise ValueError(f"edge id {e} out of range")
    for i, e in enumerate(ids):
        for f in ids[i + 1:]:
            if not _within_two(graph, e, f):
                return False, (e, f)
    return True, None


def _conflict_bits(graph: Graph) -> list[int]:
    m = graph.m
    adj = [0] * m
    for e in range(m):
        for f in range(e + 1, m):
            if _within_two(graph, e, f):
                adj[e] |= 1 << f
                adj[f] |= 1 << e
    return adj


def conflict_graph(graph: Graph) -> Graph:
    """Graph on the host's edge ids, adjacent iff edge distance <= 2.

    Strong cliques of the host are exactly the cliques of this graph.
    """
    bits = _conflict_bits(graph)
    pairs = []
    for e in range(graph.m):
        rem = bits[e] >> (e + 1) << (e + 1)
        while rem:
            b = rem & -rem
            rem ^= b
            pairs.append((e, b.bit_length() - 1))
    return Graph(graph.m, tuple(pairs))


def _max_clique_bits(adj: list[int], n: int) -> tuple[int, int]:
    """Maximum clique of a bitmask-adjacency graph: (size, vertex bitmask).

    Branch and bound with a greedy coloring bound. Candidate order is
    descending degree with ascending index tie-break, fixed so the witness
    is reproducible.
    """
    if n == 0:
        return 0, 0
    order = sorted(range(n), key=lambda v: (-adj[v].bit_count(), v))
    rank = {v: i for i, v in enumerate(order)}
    best_size = 0
    best_mask = 0

    def expand(size: int, mask: int, cand: int) -> None:
        nonlocal best_size, best_mask
        if not cand:
            if size > best_size:
                best_size, best_mask = size, mask
            return
        members = sorted(
            (v for v in range(cand.bit_length()) if cand >> v & 1),
            key=rank.__getitem__,
        )
        color_classes: list[int] = []
        colored: list[tuple[int, int]] = []
        for v in members:
            for ci, cls in enumerate(color_classes):
                if not adj[v] & cls:
                    color_classes[ci] |= 1 << v
                    colored.append((v, ci + 1))
                    break
            else:
                color_classes.append(1 << v)
                colored.append((v, len(color_classes)))
        colored.sort(key=lambda t: (t[1], rank[t[0]]))
        pool = cand
        for v, color in reversed(colored):
            if size + color <= best_size:
                return
            pool &= ~(1 << v)
            expand(size + 1, mask | 1 << v, pool & adj[v])

    expand(0, 0, (1 << n) - 1)
    return best_size, best_mask


def strong_clique_number(graph: Graph) -> tuple[int, StrongCliqueWitness]:
    """Exact SC(G) with a certifying witness (0 and empty for edgeless)."""
    if graph.m == 0:
        return 0, StrongCliqueWitness(())
    bits = _conflict_bits(graph)
    size, mask = _max_clique_bits(bits, graph.m)
    ids = tuple(e for e in range(graph.m) if mask >> e & 1)
    ok, violation = is_strong_clique(graph, ids)
    if not ok or len(ids) != size:
        raise AssertionError(f"solver produced an invalid witness: {violation}")
    return size, StrongCliqueWitness(ids)


def brute_force_sc(graph: Graph) -> int:
    """SC by exhaustive search over edge subsets, for tests only.

    Enumerates every subset that is a strong clique (extensions of failing
    subsets are pruned, which is lossless because the property is closed
    under taking subsets). Capped at 20 host edges.
    """
    m = graph.m
    if m > _BRUTE_FORCE_EDGE_CAP:
        raise ValueError("too many edges for brute-force SC (cap 20)")
    if m == 0:
        return 0
    bits = _conflict_bits(graph)
    best = 0

    def extend(cand: int, size: int) -> None:
        nonlocal best
        if size > best:
            best = size
        while cand:
            b = cand & -cand
            cand ^= b
            extend(cand & bits[b.bit_length() - 1], size + 1)

    extend((1 << m) - 1, 0)
    return best

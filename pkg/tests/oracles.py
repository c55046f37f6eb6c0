"""Independent brute-force oracles used to pin expected values.

Everything here recomputes from first principles (subset enumeration,
explicit line graphs, permutation search) and deliberately shares no
shortcut logic with the package under test.
"""

from __future__ import annotations

from collections import deque
from itertools import combinations, permutations

from strongclique.graph import Graph


def brute_matching_number(graph: Graph) -> int:
    """Largest set of pairwise disjoint edges, by recursive enumeration."""
    edges = graph.edges

    def extend(start: int, used: set[int], size: int) -> int:
        best = size
        for i in range(start, len(edges)):
            u, v = edges[i]
            if u in used or v in used:
                continue
            best = max(best, extend(i + 1, used | {u, v}, size + 1))
        return best

    return extend(0, set(), 0)


def brute_min_vertex_cover(graph: Graph) -> int:
    """Smallest vertex cover by subset scan in ascending size."""
    verts = range(graph.n)
    for size in range(graph.n + 1):
        for subset in combinations(verts, size):
            chosen = set(subset)
            if all(u in chosen or v in chosen for u, v in graph.edges):
                return size
    raise AssertionError("unreachable: V(G) always covers")


def all_min_vertex_covers(graph: Graph) -> list[set[int]]:
    size = brute_min_vertex_cover(graph)
    covers = []
    for subset in combinations(range(graph.n), size):
        chosen = set(subset)
        if all(u in chosen or v in chosen for u, v in graph.edges):
            covers.append(chosen)
    return covers


def line_graph_distance(graph: Graph, e: int, f: int) -> float:
    """Distance between edges measured by BFS in an explicit line graph."""
    m = graph.m
    adjacency = [set() for _ in range(m)]
    for a in range(m):
        for b in range(a + 1, m):
            if set(graph.edges[a]) & set(graph.edges[b]):
                adjacency[a].add(b)
                adjacency[b].add(a)
    dist = {e: 0}
    queue = deque([e])
    while queue:
        cur = queue.popleft()
        for nxt in adjacency[cur]:
            if nxt not in dist:
                dist[nxt] = dist[cur] + 1
                queue.append(nxt)
    return dist.get(f, float("inf"))


def literal_sc_all_subsets(graph: Graph) -> int:
    """SC by scanning all 2^m edge subsets against the line-graph metric."""
    m = graph.m
    assert m <= 12, "literal scan is for tiny graphs"
    pair_ok = {}
    for a in range(m):
        for b in range(a + 1, m):
            pair_ok[(a, b)] = line_graph_distance(graph, a, b) <= 2
    best = 0
    for mask in range(1 << m):
        members = [i for i in range(m) if mask >> i & 1]
        if all(pair_ok[(a, b)] for a, b in combinations(members, 2)):
            best = max(best, len(members))
    return best


def has_cycle_subgraph(graph: Graph, length: int) -> bool:
    """Cycle-of-length presence by vertex-subset + ordering brute force."""
    if length > graph.n:
        return False
    for subset in combinations(range(graph.n), length):
        first = subset[0]
        rest = subset[1:]
        for order in permutations(rest):
            ring = (first,) + order
            if all(
                graph.has_edge(ring[i], ring[(i + 1) % length])
                for i in range(length)
            ):
                return True
    return False


def all_xm_path_lengths(graph: Graph, matching, x: int) -> set[int]:
    """Every achievable constrained-path length, by literal filtering of
    all simple paths from x inside the matched vertices."""
    allowed = matching.vertices
    pair_set = set(matching.pairs)

    def in_matching(a: int, b: int) -> bool:
        return (a, b) in pair_set or (b, a) in pair_set

    found: set[int] = set()

    def valid(path: list[int]) -> bool:
        if in_matching(path[-2], path[-1]):
            return False
        verts = set(path)
        edges_on_path = set(zip(path, path[1:]))
        for a, b in pair_set:
            if a in verts and b in verts:
                if (a, b) not in edges_on_path and (b, a) not in edges_on_path:
                    return False
        return True

    def extend(path: list[int], used: set[int]) -> None:
        if len(path) >= 2 and valid(path):
            found.add(len(path) - 1)
        for w in graph.neighbors[path[-1]]:
            if w in allowed and w not in used:
                path.append(w)
                used.add(w)
                extend(path, used)
                path.pop()
                used.remove(w)

    extend([x], {x})
    return found


def tournament_has_hamiltonian_order(arcs: set, m: int, order) -> bool:
    return all((order[i], order[i + 1]) in arcs for i in range(m - 1))

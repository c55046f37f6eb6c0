"""Maximum matchings, vertex covers, and König cover extraction.

Bipartite maximum matchings are computed by augmenting paths; general
graphs use exhaustive branching over vertex subsets with memoization,
which is exact and fast at desk scale. All traversals use fixed ascending
vertex/neighbor order, so results are a deterministic function of the
graph alone.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .graph import Graph, bipartition

_EXACT_COVER_VERTEX_CAP = 64
_EXACT_COVER_EDGE_CAP = 2000


class Matching:
    """A set of pairwise vertex-disjoint edges of a host graph."""

    __slots__ = ("edge_ids", "pairs", "partner", "vertices")

    def __init__(self, graph: Graph, edge_ids: Iterable[int]):
        ids = tuple(sorted(set(edge_ids)))
        partner: dict[int, int] = {}
        pairs = []
        for e in ids:
            u, v = graph.endpoints(e)
            if u in partner or v in partner:
                raise ValueError(f"edges are not vertex-disjoint at edge {e}")
            partner[u] = v
            partner[v] = u
            pairs.append((u, v))
        self.edge_ids: tuple[int, ...] = ids
        self.pairs: tuple[tuple[int, int], ...] = tuple(pairs)
        self.partner: dict[int, int] = partner
        self.vertices: frozenset[int] = frozenset(partner)

    @property
    def size(self) -> int:
        return len(self.edge_ids)

    def __len__(self) -> int:
        return len(self.edge_ids)

    def __repr__(self) -> str:
        return f"Matching({list(self.edge_ids)})"


@dataclass(frozen=True)
class VertexCover:
    vertices: frozenset[int]

    def covers(self, graph: Graph) -> bool:
        return all(u in self.vertices or v in self.vertices for u, v in graph.edges)

    def __len__(self) -> int:
        return len(self.vertices)


def _bipartite_matching_pairs(graph: Graph, left: list[int]) -> dict[int, int]:
    """Kuhn's augmenting-path matching; left vertices tried in ascending order."""
    match: dict[int, int] = {}

    def try_augment(u: int, visited: set[int]) -> bool:
        for w in graph.neighbors[u]:
            if w in visited:
                continue
            visited.add(w)
            if w not in match or try_augment(match[w], visited):
                match[w] = u
                return True
        return False

    for u in left:
        try_augment(u, set())
    return match


def _general_matching_ids(graph: Graph) -> list[int]:
    adj = graph.adj_bits

    @lru_cache(maxsize=None)
    def best(avail: int) -> int:
        rem = avail
        while rem:
            b = rem & -rem
            rem ^= b
            u = b.bit_length() - 1
            if adj[u] & avail & ~b:
                break
        else:
            return 0
        rest = avail & ~(1 << u)
        res = best(rest)
        nb = adj[u] & rest
        while nb:
            b = nb & -nb
            nb ^= b
            v = b.bit_length() - 1
            cand = 1 + best(rest & ~(1 << v))
            if cand > res:
                res = cand
        return res

    chosen: list[int] = []
    avail = (1 << graph.n) - 1
    while True:
        u = -1
        rem = avail
        while rem:
            b = rem & -rem
            rem ^= b
            cand = b.bit_length() - 1
            if adj[cand] & avail & ~b:
                u = cand
                break
        if u < 0:
            break
        rest = avail & ~(1 << u)
        target = best(avail)
        picked = -1
        nb = adj[u] & rest
        while nb:
            b = nb & -nb
            nb ^= b
            v = b.bit_length() - 1
            if 1 + best(rest & ~(1 << v)) == target:
                picked = v
                break
        if picked < 0:
            avail = rest
        else:
            chosen.append(graph.edge_id(u, picked))
            avail = rest & ~(1 << picked)
    best.cache_clear()
    return chosen


def maximum_matching(graph: Graph) -> Matching:
    """A maximum matching of the graph, deterministic for a given graph."""
    sides = bipartition(graph)
    if sides is not None:
        left = sorted(sides[0])
        match = _bipartite_matching_pairs(graph, left)
        ids = [graph.edge_id(w, u) for w, u in match.items()]
        return Matching(graph, ids)
    return Matching(graph, _general_matching_ids(graph))


def konig_cover(graph: Graph, matching: Matching) -> VertexCover:
    """Minimum vertex cover inside V(M) extracted from a maximum bipartite
    matching by alternating-path reachability from the unmatched left side.

    Raises ValueError if the graph is not bipartite or the matching is not
    maximum (an augmenting path exists).
    """
    sides = bipartition(graph)
    if sides is None:
        raise ValueError("konig_cover requires a bipartite graph")
    side_x, side_y = sides
    for e, pair in zip(matching.edge_ids, matching.pairs):
        if graph.endpoints(e) != pair:
            raise ValueError(f"matching edge {e} does not belong to this graph")

    matched = matching.partner
    reachable: set[int] = set()
    frontier = [x for x in sorted(side_x) if x not in matched]
    reachable.update(frontier)
    while frontier:
        nxt = []
        for x in frontier:
            for y in graph.neighbors[x]:
                if y in reachable:
                    continue
                if matched.get(x) == y:
                    continue  # alternate: leave X on non-matching edges only
                reachable.add(y)
                if y not in matched:
                    raise ValueError("matching is not maximum: augmenting path found")
                x2 = matched[y]
                if x2 not in reachable:
                    reachable.add(x2)
                    nxt.append(x2)
        frontier = nxt

    cover = frozenset((side_x - reachable) | (side_y & reachable))
    if len(cover) != matching.size:
        raise ValueError("matching is not maximum for this graph")
    result = VertexCover(cover)
    assert result.covers(graph)
    assert cover <= matching.vertices
    return result


def _cover_branch(graph: Graph) -> int:
    adj = graph.adj_bits
    best_seen = graph.n

    def greedy_matching_bound(avail: int) -> int:
        # Disjoint-edge count is a lower bound on the cover size.
        count = 0
        rem = avail
        while rem:
            b = rem & -rem
            u = b.bit_length() - 1
            nb = adj[u] & rem & ~b
            rem ^= b
            if nb:
                v = (nb & -nb).bit_length() - 1
                rem &= ~(1 << v)
                count += 1
        return count

    def solve(avail: int, acc: int) -> None:
        nonlocal best_seen
        if acc + greedy_matching_bound(avail) >= best_seen:
            return
        u = -1
        du = 0
        rem = avail
        while rem:
            b = rem & -rem
            rem ^= b
            cand = b.bit_length() - 1
            d = (adj[cand] & avail).bit_count()
            if d > du:
                u, du = cand, d
        if u < 0:
            best_seen = min(best_seen, acc)
            return
        if du == 1:
            # Pendant: taking the unique neighbor is always at least as good.
            v = (adj[u] & avail).bit_length() - 1
            solve(avail & ~(1 << v) & ~(1 << u), acc + 1)
            return
        solve(avail & ~(1 << u), acc + 1)
        nb = adj[u] & avail
        solve(avail & ~nb & ~(1 << u), acc + nb.bit_count())

    solve((1 << graph.n) - 1, 0)
    return best_seen


def vertex_cover_number(graph: Graph) -> int:
    """Exact minimum vertex cover size via bounded branching."""
    if graph.n > _EXACT_COVER_VERTEX_CAP or graph.m > _EXACT_COVER_EDGE_CAP:
        raise ValueError("too large for exact vertex cover computation")
    if graph.m == 0:
        return 0
    return _cover_branch(graph)

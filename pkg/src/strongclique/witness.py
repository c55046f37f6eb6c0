"""Witness-producing constructions on strong-clique matchings.

Given a matching M that is also a strong clique of a bipartite host, the
auxiliary digraph on M's edges (arc i->j when the X-endpoint of edge i
sees the Y-endpoint of edge j) is semicomplete, so it carries a
Hamiltonian path; that path pulls back to a spanning path of G[V(M)]
through all of M, and for |M| >= 4 to a cycle on 2|M|-2 vertices reusing
most of M. This module also provides reduction of a host graph to a
minimal one preserving a strong clique, the structural checks on such
minimal hosts, and the special-matching / constrained-path machinery used
for even-cycle forcing.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cycles import CycleWitness
from .graph import INFINITY, Graph, _bfs_distances, bipartition, delete
from .matching import Matching
from .strong import _within_two, edge_distance, is_strong_clique


@dataclass(frozen=True)
class SemiCompleteDigraph:
    """Digraph with at least one arc between every pair of vertices."""

    m: int
    arcs: frozenset[tuple[int, int]]

    def has_arc(self, i: int, j: int) -> bool:
        return (i, j) in self.arcs

    def validate(self) -> None:
        for i, j in self.arcs:
            if i == j or not (0 <= i < self.m and 0 <= j < self.m):
                raise ValueError(f"invalid arc ({i}, {j})")
        for i in range(self.m):
            for j in range(i + 1, self.m):
                if (i, j) not in self.arcs and (j, i) not in self.arcs:
                    raise ValueError(f"not semicomplete: no arc between {i} and {j}")


@dataclass(frozen=True)
class XMPath:
    """A constrained path: starts at a fixed matched vertex, its last edge
    is outside the matching, and any matching edge spanned by its vertex
    set lies on the path."""

    vertices: tuple[int, ...]
    edges: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.edges)


def _require_strong_clique_matching(graph: Graph, matching: Matching) -> None:
    for e, pair in zip(matching.edge_ids, matching.pairs):
        if graph.endpoints(e) != pair:
            raise ValueError(f"matching edge {e} does not belong to this graph")
    ids = matching.edge_ids
    for i, e in enumerate(ids):
        for f in ids[i + 1:]:
            if not _within_two(graph, e, f):
                raise ValueError(
                    f"matching is not a strong clique: distance > 2 pair ({e}, {f})"
                )


def _oriented_pairs(
    graph: Graph, matching: Matching, side_x: frozenset[int]
) -> list[tuple[int, int]]:
    pairs = []
    for u, v in matching.pairs:
        if u in side_x:
            pairs.append((u, v))
        else:
            pairs.append((v, u))
    return pairs


def auxiliary_digraph(
    graph: Graph,
    matching: Matching,
    sides: tuple[frozenset[int], frozenset[int]],
) -> SemiCompleteDigraph:
    """Digraph on the matching's edges with arc (i, j) iff the X-endpoint
    of edge i is adjacent to the Y-endpoint of edge j.

    Requires a bipartite host and a matching that is a strong clique; the
    strong-clique hypothesis is what makes the result semicomplete.
    """
    side_x, side_y = sides
    for u, v in graph.edges:
        if (u in side_x) == (v in side_x):
            raise ValueError("sides are not a bipartition of the graph")
    _require_strong_clique_matching(graph, matching)
    oriented = _oriented_pairs(graph, matching, side_x)
    m = len(oriented)
    arcs = set()
    for i, (xi, _) in enumerate(oriented):
        for j, (_, yj) in enumerate(oriented):
            if i != j and graph.has_edge(xi, yj):
                arcs.add((i, j))
    digraph = SemiCompleteDigraph(m, frozenset(arcs))
    digraph.validate()
    return digraph


def semicomplete_hamiltonian_path(digraph: SemiCompleteDigraph) -> list[int]:
    """Hamiltonian path by insertion, processing vertices in id order and
    taking the first direction-preserving position each time."""
    digraph.validate()
    if digraph.m == 0:
        return []
    path = [0]
    for v in range(1, digraph.m):
        placed = False
        for pos in range(len(path) + 1):
            before_ok = pos == 0 or digraph.has_arc(path[pos - 1], v)
            after_ok = pos == len(path) or digraph.has_arc(v, path[pos])
            if before_ok and after_ok:
                path.insert(pos, v)
                placed = True
                break
        if not placed:
            raise ValueError("no insertion position: digraph is not semicomplete")
    return path


def path_through_matching(graph: Graph, matching: Matching) -> list[int]:
    """A path on all 2m endpoints of a strong-clique matching of a
    bipartite graph, alternating Y, X and containing every matching edge."""
    if matching.size < 1:
        raise ValueError("matching must be non-empty")
    sides = bipartition(graph)
    if sides is None:
        raise ValueError("host graph is not bipartite")
    digraph = auxiliary_digraph(graph, matching, sides)
    oriented = _oriented_pairs(graph, matching, sides[0])
    order = semicomplete_hamiltonian_path(digraph)
    path: list[int] = []
    for i in order:
        xi, yi = oriented[i]
        path.extend((yi, xi))
    for a, b in zip(path, path[1:]):
        if not graph.has_edge(a, b):
            raise AssertionError("constructed path misses an edge")
    return path


def _directed_cycle_of_length(
    out_bits: list[int], n: int, length: int
) -> list[int] | None:
    """Directed cycle on exactly `length` vertices, anchored at its
    smallest vertex; None if none exists."""
    if length < 2 or length > n:
        return None

    def reach_ok(current: int, anchor: int, allowed: int, budget: int) -> bool:
        seen = 1 << current
        frontier = seen
        steps = 0
        while frontier and steps < budget:
            nxt = 0
            f = frontier
            while f:
                b = f & -f
                f ^= b
                nxt |= out_bits[b.bit_length() - 1]
            if nxt >> anchor & 1:
                return True
            frontier = nxt & allowed & ~seen
            seen |= frontier
            steps += 1
        return False

    for anchor in range(n - length + 1):
        above = ((1 << n) - 1) >> (anchor + 1) << (anchor + 1)
        path = [anchor]
        used = 1 << anchor

        def dfs(current: int) -> bool:
            nonlocal used
            if len(path) == length:
                return bool(out_bits[current] >> anchor & 1)
            if not reach_ok(current, anchor, above & ~used, length - len(path) + 1):
                return False
            cand = out_bits[current] & above & ~used
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
            return path
    return None


def _strong_components(digraph: SemiCompleteDigraph) -> list[list[int]]:
    """SCCs in topological order of the condensation (Tarjan, iterative)."""
    n = digraph.m
    out = [[j for j in range(n) if (i, j) in digraph.arcs] for i in range(n)]
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    components: list[list[int]] = []
    counter = 0

    for root in range(n):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        while work:
            v, pi = work[-1]
            if pi == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            advanced = False
            for k in range(pi, len(out[v])):
                w = out[v][k]
                if index[w] == -1:
                    work[-1] = (v, k + 1)
                    work.append((w, 0))
                    advanced = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                components.append(sorted(comp))
    components.reverse()
    return components


def cycle_through_matching(
    graph: Graph, matching: Matching
) -> tuple[CycleWitness, int]:
    """A cycle on 2m-2 vertices inside G[V(M)] for a strong-clique matching
    of size m >= 4 of a bipartite host, together with the number of
    matching edges it uses (always at least m-2)."""
    m = matching.size
    if m <= 3:
        raise ValueError("m must be at least 4")
    sides = bipartition(graph)
    if sides is None:
        raise ValueError("host graph is not bipartite")
    digraph = auxiliary_digraph(graph, matching, sides)
    oriented = _oriented_pairs(graph, matching, sides[0])
    components = _strong_components(digraph)

    cycle: list[int] = []
    if len(components) == 1:
        out_bits = [0] * m
        for i, j in digraph.arcs:
            out_bits[i] |= 1 << j
        directed = _directed_cycle_of_length(out_bits, m, m - 1)
        if directed is None:
            raise AssertionError(
                "strong semicomplete digraph lacks a cycle one short of spanning"
            )
        for i in directed:
            xi, yi = oriented[i]
            cycle.extend((yi, xi))
    else:
        # Concatenating Hamiltonian paths of the components in topological
        # order gives a spanning path whose start dominates its end.
        order: list[int] = []
        for comp in components:
            sub = SemiCompleteDigraph(
                len(comp),
                frozenset(
                    (comp.index(i), comp.index(j))
                    for (i, j) in digraph.arcs
                    if i in comp and j in comp
                ),
            )
            order.extend(comp[k] for k in semicomplete_hamiltonian_path(sub))
        if not digraph.has_arc(order[0], order[-1]):
            raise AssertionError("component ordering lost the closing arc")
        cycle.append(oriented[order[0]][0])
        for i in order[1:-1]:
            xi, yi = oriented[i]
            cycle.extend((yi, xi))
        cycle.append(oriented[order[-1]][1])

    witness = CycleWitness(tuple(cycle))
    witness.validate(graph)
    matched = set(matching.pairs)
    used = 0
    for idx, u in enumerate(cycle):
        v = cycle[(idx + 1) % len(cycle)]
        if (u, v) in matched or (v, u) in matched:
            used += 1
    if len(cycle) != 2 * m - 2 or used < m - 2:
        raise AssertionError("constructed cycle violates its guarantees")
    return witness, used


# ---------------------------------------------------------------------------
# Minimal hosts for a strong clique
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MinimalReduction:
    """Result of shrinking a host to one where the clique is minimal."""

    graph: Graph
    vertex_map: dict[int, int]
    edge_map: dict[int, int]
    clique_edges: tuple[int, ...]


def s_minimal_reduce(graph: Graph, clique_edges) -> MinimalReduction:
    """Greedily delete vertices then non-clique edges (ascending ids,
    repeated to fixpoint) while the edge set stays a strong clique.

    The resulting host is minimal: removing any further vertex or edge
    either destroys a clique edge or pushes some pair beyond distance 2.
    """
    s_ids = sorted(set(clique_edges))
    ok, violation = is_strong_clique(graph, s_ids)
    if not ok:
        raise ValueError(f"input edges are not a strong clique: pair {violation}")

    current = graph
    vmap = {v: v for v in range(graph.n)}
    emap = {e: e for e in range(graph.m)}
    s_set = set(s_ids)

    def commit(projection) -> None:
        nonlocal current, vmap, emap, s_set
        current = projection.graph
        vmap = {
            o: projection.vertex_map[x]
            for o, x in vmap.items()
            if x in projection.vertex_map
        }
        emap = {
            o: projection.edge_map[x]
            for o, x in emap.items()
            if x in projection.edge_map
        }
        s_set = {projection.edge_map[e] for e in s_set}

    changed = True
    while changed:
        changed = False
        v = 0
        while v < current.n:
            incident = any(
                v in current.edges[e] for e in s_set
            )
            if not incident:
                attempt = delete(current, vertices=(v,))
                moved = [attempt.edge_map[e] for e in s_set]
                if is_strong_clique(attempt.graph, moved)[0]:
                    commit(attempt)
                    changed = True
                    continue
            v += 1
        e = 0
        while e < current.m:
            if e not in s_set:
                attempt = delete(current, edges=(e,))
                moved = [attempt.edge_map[x] for x in s_set]
                if is_strong_clique(attempt.graph, moved)[0]:
                    commit(attempt)
                    changed = True
                    continue
            e += 1
    return MinimalReduction(current, vmap, emap, tuple(sorted(s_set)))


@dataclass(frozen=True)
class MinimalityReport:
    """Structural facts that must hold in a minimal host of a strong clique."""

    vertex_saturation: tuple[bool, int | None]
    diameter_at_most_three: tuple[bool, tuple[int, int] | None]
    private_joining_edge: tuple[bool, int | None]
    distant_clique_edge: tuple[bool, int | None] | None

    @property
    def all_passed(self) -> bool:
        items = [
            self.vertex_saturation[0],
            self.diameter_at_most_three[0],
            self.private_joining_edge[0],
        ]
        if self.distant_clique_edge is not None:
            items.append(self.distant_clique_edge[0])
        return all(items)


def check_minimal_properties(
    graph: Graph, clique_edges, s_is_maximum: bool
) -> MinimalityReport:
    """Verify the structural consequences of minimality.

    Always checked: every vertex touches a clique edge; diameter <= 3; for
    every non-clique edge uv there are clique edges at u and v joined only
    by uv. When the clique is maximum, additionally: every non-clique edge
    has some clique edge at distance >= 3 (else it could be added).
    """
    s_ids = sorted(set(clique_edges))
    s_set = set(s_ids)
    covered: set[int] = set()
    for e in s_ids:
        covered.update(graph.endpoints(e))

    saturation: tuple[bool, int | None] = (True, None)
    for v in range(graph.n):
        if v not in covered:
            saturation = (False, v)
            break

    diameter: tuple[bool, tuple[int, int] | None] = (True, None)
    full = (1 << graph.n) - 1
    for u in range(graph.n):
        dist = _bfs_distances(graph, u, full)
        for v in range(u + 1, graph.n):
            if dist[v] is INFINITY or dist[v] > 3:
                diameter = (False, (u, v))
                break
        if not diameter[0]:
            break

    def s_edges_at(v: int) -> list[int]:
        return [e for e in s_ids if v in graph.edges[e]]

    private: tuple[bool, int | None] = (True, None)
    for edge in range(graph.m):
        if edge in s_set:
            continue
        u, v = graph.edges[edge]
        witnessed = False
        for e1 in s_edges_at(u):
            pu = {x for x in graph.edges[e1]}
            for e2 in s_edges_at(v):
                if e2 == e1:
                    continue
                pv = {x for x in graph.edges[e2]}
                # Count each unordered joining edge once.
                joining = len(
                    {
                        (min(p, q), max(p, q))
                        for p in pu
                        for q in pv
                        if p != q and graph.has_edge(p, q)
                    }
                )
                if joining == 1:
                    witnessed = True
                    break
            if witnessed:
                break
        if not witnessed:
            private = (False, edge)
            break

    distant: tuple[bool, int | None] | None = None
    if s_is_maximum:
        distant = (True, None)
        for edge in range(graph.m):
            if edge in s_set:
                continue
            if not any(edge_distance(graph, edge, e) >= 3 for e in s_ids):
                distant = (False, edge)
                break

    return MinimalityReport(saturation, diameter, private, distant)


# ---------------------------------------------------------------------------
# Special matchings and constrained paths
# ---------------------------------------------------------------------------


def is_x_special(graph: Graph, matching: Matching, x: int) -> bool:
    """Whether the matching realizes the rigid pattern rooted at x: x sees
    exactly one endpoint of every other matching edge, those seen
    endpoints are pairwise non-adjacent, their partners form a clique,
    there are no other edges among the matched vertices, and x's own
    partner is pendant within them."""
    if x not in matching.vertices:
        raise ValueError(f"vertex {x} is not matched")
    xp = matching.partner[x]
    seen: list[int] = []
    partners: list[int] = []
    for u, v in matching.pairs:
        if x in (u, v):
            continue
        u_adj = graph.has_edge(x, u)
        v_adj = graph.has_edge(x, v)
        if u_adj == v_adj:
            return False
        seen.append(u if u_adj else v)
        partners.append(v if u_adj else u)
    if set(graph.neighbors[xp]) & matching.vertices != {x}:
        return False
    for i, si in enumerate(seen):
        for sj in seen[i + 1:]:
            if graph.has_edge(si, sj):
                return False
    for i, pi in enumerate(partners):
        for pj in partners[i + 1:]:
            if not graph.has_edge(pi, pj):
                return False
    for s in seen:
        for p in partners:
            if matching.partner[s] != p and graph.has_edge(s, p):
                return False
        if graph.has_edge(s, xp):
            return False
    return True


def find_xm_path(
    graph: Graph, matching: Matching, x: int, length: int
) -> XMPath | None:
    """A constrained path of exactly `length` edges from x inside the
    matched vertices, or None. Deterministic: ascending neighbor order."""
    if x not in matching.vertices:
        raise ValueError(f"vertex {x} is not matched")
    if length < 1:
        raise ValueError("path length must be at least 1")
    if length > 2 * matching.size - 1:
        return None
    allowed = matching.vertices
    partner = matching.partner
    matched_pairs = set(matching.pairs)

    path = [x]
    used = {x}

    def last_edge_in_matching() -> bool:
        a, b = path[-2], path[-1]
        return (a, b) in matched_pairs or (b, a) in matched_pairs

    def dfs() -> bool:
        if len(path) == length + 1:
            return not last_edge_in_matching()
        current = path[-1]
        for w in graph.neighbors[current]:
            if w not in allowed or w in used:
                continue
            # A matching edge spanned by the path must lie on the path: once
            # both endpoints are placed non-consecutively that is impossible.
            wp = partner[w]
            if wp in used and wp != current:
                continue
            path.append(w)
            used.add(w)
            if dfs():
                return True
            path.pop()
            used.remove(w)
        return False

    if not dfs():
        return None
    edges = tuple(graph.edge_id(a, b) for a, b in zip(path, path[1:]))
    return XMPath(tuple(path), edges)

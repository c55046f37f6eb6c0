"""Immutable simple undirected graphs with dense integer vertex ids.

Vertices are ``0..n-1``; edges are stored as a tuple of ordered pairs
``(u, v)`` with ``u < v``, and an edge's index in that tuple is its edge id.
Per-vertex neighbor bitmasks make adjacency tests and BFS cheap for the
desk-scale graphs this package targets (at least 64 vertices / 2000 edges).

Deletion and edge-induced-subgraph operations never mutate; they return a
new graph together with old->new relabeling maps so that witnesses found in
a reduced graph can be translated back to the original.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

INFINITY = math.inf


def _rebuild(n: int, edges: tuple[tuple[int, int], ...]) -> "Graph":
    return Graph(n, edges)


class Graph:
    """A simple undirected graph. Instances are immutable and hashable."""

    __slots__ = ("n", "edges", "neighbors", "adj_bits", "_edge_ids")

    def __init__(self, n: int, edges: tuple[tuple[int, int], ...]):
        # Callers go through build_graph() for validation; this constructor
        # trusts its input (normalized u < v, no loops, no duplicates).
        self.n = n
        self.edges = edges
        nbr: list[list[int]] = [[] for _ in range(n)]
        bits = [0] * n
        ids: dict[tuple[int, int], int] = {}
        for idx, (u, v) in enumerate(edges):
            nbr[u].append(v)
            nbr[v].append(u)
            bits[u] |= 1 << v
            bits[v] |= 1 << u
            ids[(u, v)] = idx
        self.neighbors: tuple[tuple[int, ...], ...] = tuple(
            tuple(sorted(a)) for a in nbr
        )
        self.adj_bits: tuple[int, ...] = tuple(bits)
        self._edge_ids = ids

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.neighbors[v])

    def has_edge(self, u: int, v: int) -> bool:
        if not (0 <= u < self.n and 0 <= v < self.n):
            return False
        return bool(self.adj_bits[u] >> v & 1)

    def edge_id(self, u: int, v: int) -> int:
        """Edge id of the pair {u, v}; raises ValueError if absent."""
        key = (u, v) if u < v else (v, u)
        try:
            return self._edge_ids[key]
        except KeyError:
            raise ValueError(f"no edge {{{u}, {v}}} in graph") from None

    def endpoints(self, edge: int) -> tuple[int, int]:
        if not 0 <= edge < len(self.edges):
            raise ValueError(f"edge id {edge} out of range")
        return self.edges[edge]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def __reduce__(self):
        return (_rebuild, (self.n, self.edges))


@dataclass(frozen=True)
class GraphProjection:
    """A derived graph plus the old->new relabeling of surviving ids."""

    graph: Graph
    vertex_map: dict[int, int]
    edge_map: dict[int, int]


def build_graph(n: int, pairs: Iterable[Sequence[int]]) -> Graph:
    """Build a validated graph on vertices 0..n-1 from unordered pairs.

    Edge ids follow the input order. Rejects loops, endpoints out of
    range, and duplicate pairs.
    """
    if n < 0:
        raise ValueError("vertex count must be non-negative")
    seen: set[tuple[int, int]] = set()
    edges: list[tuple[int, int]] = []
    for pair in pairs:
        u, v = pair
        if u == v:
            raise ValueError(f"loop edge ({u}, {v}) rejected")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) endpoint out of range for n={n}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise ValueError(f"duplicate edge ({u}, {v})")
        seen.add(key)
        edges.append(key)
    return Graph(n, tuple(edges))


def max_degree(graph: Graph) -> int:
    """Largest vertex degree; 0 for edgeless graphs."""
    if graph.n == 0:
        return 0
    return max(len(a) for a in graph.neighbors)


def bipartition(graph: Graph) -> tuple[frozenset[int], frozenset[int]] | None:
    """Two-color the graph, or return None if it has an odd cycle.

    Deterministic: within each connected component the side containing the
    component's lowest vertex id goes to the first part.
    """
    color = [-1] * graph.n
    for root in range(graph.n):
        if color[root] != -1:
            continue
        color[root] = 0
        queue = [root]
        while queue:
            nxt: list[int] = []
            for u in queue:
                for w in graph.neighbors[u]:
                    if color[w] == -1:
                        color[w] = color[u] ^ 1
                        nxt.append(w)
                    elif color[w] == color[u]:
                        return None
            queue = nxt
    side_x = frozenset(v for v in range(graph.n) if color[v] == 0)
    side_y = frozenset(v for v in range(graph.n) if color[v] == 1)
    return side_x, side_y


def _bfs_distances(graph: Graph, source: int, allowed: int) -> list[float]:
    """BFS distances from source using only vertices in the allowed bitmask."""
    dist: list[float] = [INFINITY] * graph.n
    if not allowed >> source & 1:
        return dist
    dist[source] = 0
    frontier = 1 << source
    seen = frontier
    d = 0
    adj = graph.adj_bits
    while frontier:
        reach = 0
        f = frontier
        while f:
            b = f & -f
            f ^= b
            reach |= adj[b.bit_length() - 1]
        frontier = reach & allowed & ~seen
        seen |= frontier
        d += 1
        f = frontier
        while f:
            b = f & -f
            f ^= b
            dist[b.bit_length() - 1] = d
    return dist


def vertex_distance(graph: Graph, u: int, v: int) -> int | float:
    """Shortest-path length between u and v; INFINITY across components."""
    if not (0 <= u < graph.n and 0 <= v < graph.n):
        raise ValueError("vertex out of range")
    if u == v:
        return 0
    dist = _bfs_distances(graph, u, (1 << graph.n) - 1)
    return dist[v] if dist[v] is not INFINITY else INFINITY


def edge_induced_subgraph(graph: Graph, edge_ids: Iterable[int]) -> GraphProjection:
    """Subgraph on exactly the given edges, vertices reindexed densely.

    The vertex set is the union of the edges' endpoints; isolated vertices
    of the host never survive.
    """
    ids = sorted(set(edge_ids))
    for e in ids:
        if not 0 <= e < graph.m:
            raise ValueError(f"edge id {e} out of range")
    touched = sorted({v for e in ids for v in graph.edges[e]})
    vmap = {old: new for new, old in enumerate(touched)}
    new_edges = []
    emap = {}
    for new_id, e in enumerate(ids):
        u, v = graph.edges[e]
        new_edges.append((vmap[u], vmap[v]))
        emap[e] = new_id
    return GraphProjection(Graph(len(touched), tuple(new_edges)), vmap, emap)


def delete(
    graph: Graph,
    vertices: Iterable[int] = (),
    edges: Iterable[int] = (),
) -> GraphProjection:
    """Remove the listed edges, then the listed vertices with all incident
    edges; surviving ids are reindexed densely in ascending order."""
    vdel = set(vertices)
    edel = set(edges)
    for v in vdel:
        if not 0 <= v < graph.n:
            raise ValueError(f"vertex id {v} out of range")
    for e in edel:
        if not 0 <= e < graph.m:
            raise ValueError(f"edge id {e} out of range")
    keep = [v for v in range(graph.n) if v not in vdel]
    vmap = {old: new for new, old in enumerate(keep)}
    new_edges = []
    emap = {}
    for old_id, (u, v) in enumerate(graph.edges):
        if old_id in edel or u in vdel or v in vdel:
            continue
        emap[old_id] = len(new_edges)
        new_edges.append((vmap[u], vmap[v]))
    return GraphProjection(Graph(len(keep), tuple(new_edges)), vmap, emap)


# ---------------------------------------------------------------------------
# graph6 codec
# ---------------------------------------------------------------------------

_G6_HEADER = ">>graph6<<"


def _g6_pair_order(n: int):
    # Column-major upper triangle: (0,1), (0,2), (1,2), (0,3), ...
    for v in range(1, n):
        for u in range(v):
            yield u, v


def to_graph6(graph: Graph) -> str:
    """Encode as a graph6 line (without trailing newline)."""
    n = graph.n
    if n <= 62:
        head = chr(n + 63)
    elif n <= 258047:
        head = chr(126) + chr((n >> 12 & 63) + 63) + chr((n >> 6 & 63) + 63) + chr((n & 63) + 63)
    else:
        raise ValueError("graph too large for this graph6 writer (n > 258047)")
    chars = []
    acc = 0
    nbits = 0
    for u, v in _g6_pair_order(n):
        acc = acc << 1 | (graph.adj_bits[u] >> v & 1)
        nbits += 1
        if nbits == 6:
            chars.append(chr(acc + 63))
            acc, nbits = 0, 0
    if nbits:
        chars.append(chr((acc << (6 - nbits)) + 63))
    return head + "".join(chars)


def from_graph6(line: str) -> Graph:
    """Decode one graph6 line; accepts an optional '>>graph6<<' header."""
    s = line.rstrip("\n")
    if s.startswith(">>"):
        if not s.startswith(_G6_HEADER):
            raise ValueError(f"unsupported header in graph6 input: {s[:12]!r}")
        s = s[len(_G6_HEADER):]
    if not s:
        raise ValueError("empty graph6 line")
    data = [ord(c) - 63 for c in s]
    for c, x in zip(s, data):
        if not 0 <= x <= 63:
            raise ValueError(f"invalid graph6 byte {c!r}")
    if data[0] <= 62:
        n = data[0]
        pos = 1
    else:
        if len(data) >= 4 and data[1] <= 62:
            n = data[1] << 12 | data[2] << 6 | data[3]
            pos = 4
        else:
            raise ValueError("unsupported graph6 size encoding")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[pos:]
    if len(body) != need:
        raise ValueError(
            f"graph6 body length {len(body)} does not match n={n} (expected {need})"
        )
    bits = 0
    for x in body:
        bits = bits << 6 | x
    pad = need * 6 - nbits
    if pad and bits & ((1 << pad) - 1):
        raise ValueError("graph6 padding bits are not zero")
    bits >>= pad
    edges = []
    for i, (u, v) in enumerate(_g6_pair_order(n)):
        if bits >> (nbits - 1 - i) & 1:
            edges.append((u, v))
    return Graph(n, tuple(edges))


# ---------------------------------------------------------------------------
# edge-list codec
# ---------------------------------------------------------------------------


def to_edgelist(graph: Graph) -> str:
    """Render as the plain text edge-list format ('n m' then 'u v' lines)."""
    lines = [f"{graph.n} {graph.m}"]
    lines.extend(f"{u} {v}" for u, v in graph.edges)
    return "\n".join(lines) + "\n"


def from_edgelist(text: str) -> Graph:
    """Parse the edge-list format; '#' starts a comment line.

    Raises ValueError with a 1-based line number on malformed input.
    """
    header: tuple[int, int] | None = None
    pairs: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2 or not all(p.lstrip("-").isdigit() for p in parts):
            raise ValueError(f"line {lineno}: expected two integers, got {raw!r}")
        a, b = int(parts[0]), int(parts[1])
        if header is None:
            if a < 0 or b < 0:
                raise ValueError(f"line {lineno}: negative count in header")
            header = (a, b)
        else:
            pairs.append((a, b))
    if header is None:
        raise ValueError("line 1: missing 'n m' header line")
    n, m = header
    if len(pairs) != m:
        raise ValueError(f"expected {m} edge lines, found {len(pairs)}")
    try:
        return build_graph(n, pairs)
    except ValueError as exc:
        raise ValueError(f"invalid edge list: {exc}") from None

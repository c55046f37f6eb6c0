"""Deterministic graph builders: extremal families, standard graphs,
seeded random sources, and exhaustive labeled enumeration.

Random graphs use an explicit splitmix64 stream (documented in the README)
rather than a library default, so a given (parameters, seed) pair yields a
bit-identical graph on every platform. Construction conventions: core
vertices come first, pendant vertices are appended after the core in
construction order, making encodings stable for golden tests.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .graph import Graph, build_graph
from .matching import Matching

_ENUMERATION_CAP = 8
_MASK64 = (1 << 64) - 1


def c5_blowup(t: int) -> Graph:
    """Five independent parts of size t, consecutive parts completely
    joined in a ring: 5t vertices, 5t^2 edges, max degree 2t."""
    if t < 1:
        raise ValueError("blowup factor t must be at least 1")
    parts = [range(i * t, (i + 1) * t) for i in range(5)]
    pairs = []
    for i in range(5):
        for u in parts[i]:
            for v in parts[(i + 1) % 5]:
                pairs.append((u, v))
    return build_graph(5 * t, pairs)


def complete_plus_pendants(q: int, p: int) -> Graph:
    """Complete graph on q vertices with p pendant leaves on each core
    vertex. The whole edge set is a strong clique: every edge meets the
    core, and core endpoints are pairwise adjacent."""
    if q < 2:
        raise ValueError("core size q must be at least 2")
    if p < 1:
        raise ValueError("pendant count p must be at least 1")
    pairs = [(u, v) for u in range(q) for v in range(u + 1, q)]
    n = q
    for u in range(q):
        for _ in range(p):
            pairs.append((u, n))
            n += 1
    return build_graph(n, pairs)


def bipartite_pendant_extremal(k: int, p: int) -> Graph:
    """Complete bipartite graph on parts of sizes k-1 and p+k-1 with p
    pendant leaves on the first big-side vertex. Bipartite, has no cycle
    longer than 2(k-1), and its k*Delta-(k-1) edges form a strong clique."""
    if k < 2:
        raise ValueError("parameter k must be at least 2")
    if p < 1:
        raise ValueError("pendant count p must be at least 1")
    small = range(k - 1)
    big0 = k - 1
    big = range(big0, big0 + p + k - 1)
    pairs = [(a, b) for a in small for b in big]
    n = big0 + p + k - 1
    for _ in range(p):
        pairs.append((big0, n))
        n += 1
    return build_graph(n, pairs)


def complete_graph(n: int) -> Graph:
    if n < 0:
        raise ValueError("vertex count must be non-negative")
    return build_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 0 or b < 0:
        raise ValueError("part sizes must be non-negative")
    return build_graph(a + b, [(u, a + v) for u in range(a) for v in range(b)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs at least 1 vertex")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(leaves: int) -> Graph:
    """Star with a center (vertex 0) and the given number of leaves."""
    if leaves < 0:
        raise ValueError("leaf count must be non-negative")
    return build_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def petersen_graph() -> Graph:
    pairs = [(i, (i + 1) % 5) for i in range(5)]
    pairs += [(i, i + 5) for i in range(5)]
    pairs += [(i + 5, (i + 2) % 5 + 5) for i in range(5)]
    return build_graph(10, pairs)


def special_matching_graph(m: int) -> tuple[Graph, Matching, int]:
    """The rigid matched pattern on 2m vertices rooted at vertex 0: the
    root sees one endpoint of every other matching edge, the opposite
    endpoints form a clique, and the root's partner is pendant.

    Equivalently: a complete graph on m vertices with every edge at one
    vertex subdivided and a pendant edge added at that vertex. Returns the
    graph, the matching, and the root vertex.
    """
    if m < 1:
        raise ValueError("matching size m must be at least 1")
    # Vertices: 0 = root x1, 1..m-1 = x2..xm, m..2m-1 = partners x1'..xm'.
    pairs = [(i, m + i) for i in range(m)]
    pairs += [(0, i) for i in range(1, m)]
    pairs += [(m + i, m + j) for i in range(1, m) for j in range(i + 1, m)]
    graph = build_graph(2 * m, pairs)
    matching = Matching(graph, range(m))
    return graph, matching, 0


_STANDARD_FAMILIES = {
    "complete": (complete_graph, ("n",)),
    "complete_bipartite": (complete_bipartite, ("a", "b")),
    "cycle": (cycle_graph, ("n",)),
    "path": (path_graph, ("n",)),
    "star": (star_graph, ("n",)),
    "petersen": (petersen_graph, ()),
}


def standard_graph(name: str, *params: int) -> Graph:
    """Build a named standard graph; see _STANDARD_FAMILIES for names."""
    if name not in _STANDARD_FAMILIES:
        raise ValueError(f"unknown standard graph {name!r}")
    builder, arg_names = _STANDARD_FAMILIES[name]
    if len(params) != len(arg_names):
        raise ValueError(
            f"{name} expects {len(arg_names)} parameter(s) {arg_names}, got {len(params)}"
        )
    return builder(*params)


class _SplitMix64:
    """Minimal deterministic PRNG; the full algorithm is in the README."""

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def next_unit(self) -> float:
        # 53-bit mantissa, uniform on [0, 1).
        return (self.next_u64() >> 11) * (2.0 ** -53)


def random_graph(n: int, edge_probability: float, seed: int) -> Graph:
    """Seeded uniform random graph; identical inputs give identical output.

    Pairs are visited in lexicographic order and kept when the next
    splitmix64 draw falls below the probability.
    """
    if n < 0:
        raise ValueError("vertex count must be non-negative")
    if not 0 <= edge_probability <= 1:
        raise ValueError("edge probability must lie in [0, 1]")
    rng = _SplitMix64(seed)
    pairs = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.next_unit() < edge_probability
    ]
    return build_graph(n, pairs)


def random_bipartite(a: int, b: int, edge_probability: float, seed: int) -> Graph:
    """Seeded random bipartite graph on parts 0..a-1 and a..a+b-1."""
    if a < 0 or b < 0:
        raise ValueError("part sizes must be non-negative")
    if not 0 <= edge_probability <= 1:
        raise ValueError("edge probability must lie in [0, 1]")
    rng = _SplitMix64(seed)
    pairs = [
        (u, a + v)
        for u in range(a)
        for v in range(b)
        if rng.next_unit() < edge_probability
    ]
    return build_graph(a + b, pairs)


def _pair_list(n: int) -> list[tuple[int, int]]:
    return [(u, v) for u in range(n) for v in range(u + 1, n)]


def _canonical_mask(mask: int, n: int, perm_tables: list[list[int]]) -> int:
    best = mask
    for table in perm_tables:
        image = 0
        rem = mask
        while rem:
            b = rem & -rem
            rem ^= b
            image |= 1 << table[b.bit_length() - 1]
        if image < best:
            best = image
    return best


def _permutation_bit_tables(n: int) -> list[list[int]]:
    from itertools import permutations

    pairs = _pair_list(n)
    index = {pq: i for i, pq in enumerate(pairs)}
    tables = []
    for perm in permutations(range(n)):
        table = []
        for u, v in pairs:
            pu, pv = perm[u], perm[v]
            table.append(index[(pu, pv) if pu < pv else (pv, pu)])
        tables.append(table)
    return tables


def enumerate_graphs(
    n: int,
    dedup: bool = False,
    start: int = 0,
    stop: int | None = None,
) -> Iterator[Graph]:
    """Stream every labeled graph on n vertices in bitmask order.

    Bit i of the mask corresponds to the i-th pair in lexicographic order.
    With dedup, only the minimum-mask representative of each isomorphism
    class (over all n! vertex permutations) is yielded. The optional
    [start, stop) mask range lets parallel consumers split the stream.
    """
    if n > _ENUMERATION_CAP:
        raise ValueError(f"enumeration cap is n <= {_ENUMERATION_CAP}")
    if n < 0:
        raise ValueError("vertex count must be non-negative")
    pairs = _pair_list(n)
    total = 1 << len(pairs)
    stop = total if stop is None else min(stop, total)
    perm_tables = _permutation_bit_tables(n) if dedup else None
    for mask in range(max(start, 0), stop):
        if perm_tables is not None and _canonical_mask(mask, n, perm_tables) != mask:
            continue
        edges = tuple(pairs[i] for i in range(len(pairs)) if mask >> i & 1)
        yield Graph(n, edges)


@dataclass(frozen=True)
class GeneratorSpec:
    """A reproducible graph recipe: family name plus integer parameters,
    and a seed/probability for the random families."""

    family: str
    params: dict[str, int] = field(default_factory=dict)
    probability: float | None = None
    seed: int | None = None

    def build(self) -> Graph:
        p = self.params
        if self.family == "c5_blowup":
            return c5_blowup(p["t"])
        if self.family == "complete_plus_pendants":
            return complete_plus_pendants(p["q"], p["p"])
        if self.family == "bipartite_pendant_extremal":
            return bipartite_pendant_extremal(p["k"], p["p"])
        if self.family == "special_matching":
            return special_matching_graph(p["m"])[0]
        if self.family == "random":
            if self.probability is None or self.seed is None:
                raise ValueError("random family needs probability and seed")
            return random_graph(p["n"], self.probability, self.seed)
        if self.family == "random_bipartite":
            if self.probability is None or self.seed is None:
                raise ValueError("random_bipartite family needs probability and seed")
            return random_bipartite(p["a"], p["b"], self.probability, self.seed)
        if self.family in _STANDARD_FAMILIES:
            _, arg_names = _STANDARD_FAMILIES[self.family]
            return standard_graph(self.family, *(p[a] for a in arg_names))
        raise ValueError(f"unknown generator family {self.family!r}")

"""Bound specifications and verification of graphs against them.

Each supported statement is keyed by an opaque identifier and pairs a
precondition list (minimum degree, bipartiteness, forbidden cycle
lengths, and for LEM32 a triangle inside the solver's witness subgraph)
with an exact integer bound formula in the maximum degree. Verification
reports whether a statement applies, holds, holds with equality, or is
contradicted; contradictions are expected only for the conjecture-kind
identifiers and are surfaced as counterexamples with persistable
evidence.

The decomposition audit cross-checks the counting argument behind the
(2k-1)*Delta + (2k-1)^2 bound on any host graph: it splits the edges of
a maximum-strong-clique subgraph H around a maximum matching M and
verifies |E(H)| <= |Y|(Delta(H)-D/2-1) + |M|(D+1) together with the
chained |E(H)| <= |M|*Delta(H) + |M|*D/2.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable

from .cycles import CycleWitness, find_cycle_of_length
from .graph import Graph, bipartition, from_graph6, max_degree, to_graph6
from .matching import maximum_matching
from .strong import StrongCliqueWitness, strong_clique_number

SCHEMA_VERSION = 1


@dataclass(frozen=True)
class _BoundRule:
    k_min: int | None
    k_max: int | None
    bipartite: bool
    forbidden: Callable[[int | None], tuple[int, ...]]
    min_delta: Callable[[int | None], int]
    formula: Callable[[int | None, int], int]
    proved: bool
    witness_triangle: bool = False


def _rule(
    k_min=None,
    k_max=None,
    bipartite=False,
    forbidden=lambda k: (),
    min_delta=lambda k: 1,
    formula=None,
    proved=True,
    witness_triangle=False,
) -> _BoundRule:
    return _BoundRule(
        k_min, k_max, bipartite, forbidden, min_delta, formula, proved, witness_triangle
    )


BOUND_RULES: dict[str, _BoundRule] = {
    "THM16I": _rule(
        forbidden=lambda k: (4,),
        min_delta=lambda k: 4,
        formula=lambda k, d: 3 * d - 3,
    ),
    "THM16II": _rule(
        k_min=3,
        forbidden=lambda k: (2 * k,),
        formula=lambda k, d: 10 * k * k * d - 10 * k * k,
    ),
    "THM16III": _rule(
        k_min=2,
        forbidden=lambda k: (2 * k, 2 * k + 1, 2 * k + 2),
        formula=lambda k, d: (2 * k - 1) * d - (2 * k - 3),
    ),
    "THM18": _rule(
        k_min=2,
        forbidden=lambda k: (3, 5, 2 * k, 2 * k + 2),
        formula=lambda k, d: max(k * d, 2 * k * (k - 1)),
    ),
    "THM19": _rule(
        k_min=2,
        bipartite=True,
        forbidden=lambda k: (2 * k,),
        formula=lambda k, d: k * d - (k - 1),
    ),
    "THM110I": _rule(
        k_min=4,
        forbidden=lambda k: (5, 2 * k),
        formula=lambda k, d: k * d - (k - 1),
    ),
    "THM110II": _rule(
        k_min=2,
        k_max=3,
        forbidden=lambda k: (3, 5, 2 * k),
        formula=lambda k, d: k * d - (k - 1),
    ),
    "THM111": _rule(
        k_min=3,
        forbidden=lambda k: (2 * k,),
        formula=lambda k, d: (2 * k - 1) * d + (2 * k - 1) ** 2,
    ),
    "THM23": _rule(
        bipartite=True,
        formula=lambda k, d: d * d,
    ),
    "LEM32": _rule(
        forbidden=lambda k: (5,),
        formula=lambda k, d: 4 * d - 3,
        witness_triangle=True,
    ),
    "REMARK": _rule(
        k_min=3,
        forbidden=lambda k: (2 * k,),
        formula=lambda k, d: (2 * k - 1) * (4 * d + 1) // 3,
    ),
    "CONJ15": _rule(
        k_min=2,
        forbidden=lambda k: (2 * k,),
        # Below max degree 2k-2 the linear bound drops under the clique on
        # 2k-1 vertices itself, so the statement starts where it is tight.
        min_delta=lambda k: 2 * k - 2,
        formula=lambda k, d: (2 * k - 1) * d - (2 * k - 1) * (2 * k - 2) // 2,
        proved=False,
    ),
    "CONJ17": _rule(
        k_min=2,
        bipartite=True,
        forbidden=lambda k: (2 * k,),
        formula=lambda k, d: k * d - (k - 1),
        proved=False,
    ),
}

IDENTIFIERS = tuple(BOUND_RULES)


@dataclass(frozen=True)
class BoundSpec:
    """An identifier from BOUND_RULES plus its k parameter (when used)."""

    identifier: str
    k: int | None = None

    def __post_init__(self):
        rule = BOUND_RULES.get(self.identifier)
        if rule is None:
            raise ValueError(f"unknown bound identifier {self.identifier!r}")
        if rule.k_min is None:
            if self.k is not None:
                raise ValueError(f"{self.identifier} takes no k parameter")
        else:
            if self.k is None:
                raise ValueError(f"{self.identifier} requires a k parameter")
            if self.k < rule.k_min or (rule.k_max is not None and self.k > rule.k_max):
                hi = rule.k_max if rule.k_max is not None else "inf"
                raise ValueError(
                    f"{self.identifier} needs k in [{rule.k_min}, {hi}], got {self.k}"
                )

    @property
    def rule(self) -> _BoundRule:
        return BOUND_RULES[self.identifier]

    def label(self) -> str:
        return self.identifier if self.k is None else f"{self.identifier}(k={self.k})"


def bound_value(spec: BoundSpec, delta: int) -> int:
    """The exact integer bound for the given maximum degree."""
    if delta < spec.rule.min_delta(spec.k):
        raise ValueError(
            f"{spec.label()} requires max degree >= {spec.rule.min_delta(spec.k)}"
        )
    return spec.rule.formula(spec.k, delta)


@dataclass(frozen=True)
class PreconditionResult:
    name: str
    passed: bool
    witness: CycleWitness | None = None

    def to_json_dict(self) -> dict:
        out: dict = {"name": self.name, "passed": self.passed}
        if self.witness is not None:
            out["witness_cycle"] = list(self.witness.vertices)
        return out


def _evaluate_preconditions(
    graph: Graph, spec: BoundSpec, witness: StrongCliqueWitness | None
) -> list[PreconditionResult]:
    rule = spec.rule
    results = []
    need = rule.min_delta(spec.k)
    results.append(
        PreconditionResult(f"max_degree >= {need}", max_degree(graph) >= need)
    )
    if rule.bipartite:
        results.append(PreconditionResult("bipartite", bipartition(graph) is not None))
    for length in sorted(set(rule.forbidden(spec.k))):
        cyc = find_cycle_of_length(graph, length)
        results.append(PreconditionResult(f"C{length}-free", cyc is None, cyc))
    if rule.witness_triangle:
        if witness is None:
            witness = strong_clique_number(graph)[1]
        sub_pairs = [graph.endpoints(e) for e in witness.edges]
        sub = Graph(graph.n, tuple(sub_pairs))
        tri = find_cycle_of_length(sub, 3) if sub.m >= 3 else None
        results.append(
            PreconditionResult("witness subgraph contains a triangle", tri is not None)
        )
    return results


def preconditions(graph: Graph, spec: BoundSpec) -> list[PreconditionResult]:
    """Evaluate every hypothesis of the statement against the graph."""
    return _evaluate_preconditions(graph, spec, None)


@dataclass(frozen=True)
class VerificationReport:
    graph_name: str | None
    graph6: str
    delta: int
    sc: int
    witness: tuple[int, ...]
    spec: BoundSpec
    preconditions: tuple[PreconditionResult, ...]
    applicable: bool
    bound: int | None
    holds: bool | None
    tight: bool
    counterexample: bool
    timing_seconds: float | None = None

    @property
    def status(self) -> str:
        if not self.applicable:
            return "not_applicable"
        return "holds" if self.holds else "COUNTEREXAMPLE"

    def to_json_dict(self) -> dict:
        # Timing is intentionally omitted so serialized reports are
        # byte-identical across reruns and worker counts.
        return {
            "graph": self.graph_name,
            "graph6": self.graph6,
            "spec": {"identifier": self.spec.identifier, "k": self.spec.k},
            "max_degree": self.delta,
            "strong_clique_number": self.sc,
            "witness_edges": list(self.witness),
            "preconditions": [p.to_json_dict() for p in self.preconditions],
            "applicable": self.applicable,
            "bound": self.bound,
            "status": self.status,
            "tight": self.tight,
        }


def _verify_known_sc(
    graph: Graph,
    spec: BoundSpec,
    sc: int,
    witness: StrongCliqueWitness,
    name: str | None,
    started: float,
) -> VerificationReport:
    pre = _evaluate_preconditions(graph, spec, witness)
    applicable = all(p.passed for p in pre)
    delta = max_degree(graph)
    bound = bound_value(spec, delta) if applicable else None
    holds = (sc <= bound) if applicable else None
    tight = applicable and sc == bound
    return VerificationReport(
        graph_name=name,
        graph6=to_graph6(graph),
        delta=delta,
        sc=sc,
        witness=witness.edges,
        spec=spec,
        preconditions=tuple(pre),
        applicable=applicable,
        bound=bound,
        holds=holds,
        tight=tight,
        counterexample=bool(applicable and not holds),
        timing_seconds=time.perf_counter() - started,
    )


def verify(graph: Graph, spec: BoundSpec, name: str | None = None) -> VerificationReport:
    """Full report for one graph against one bound specification."""
    started = time.perf_counter()
    sc, witness = strong_clique_number(graph)
    return _verify_known_sc(graph, spec, sc, witness, name, started)


# ---------------------------------------------------------------------------
# Decomposition audit
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MatchingDecomposition:
    """Split of a maximum-strong-clique subgraph H around a maximum
    matching M: Z are unmatched host vertices, X matched vertices with an
    H-neighbor in Z, Y those with two or more, and D the largest H-degree
    outside Y."""

    clique_edges: tuple[int, ...]
    matching_edges: tuple[int, ...]
    m: int
    z: tuple[int, ...]
    x: tuple[int, ...]
    y: tuple[int, ...]
    d: int
    delta_h: int


@dataclass(frozen=True)
class DecompositionAudit:
    decomposition: MatchingDecomposition
    edge_count: int
    split_bound: Fraction
    chained_bound: Fraction
    split_holds: bool
    chained_holds: bool
    invariants_hold: bool

    @property
    def passed(self) -> bool:
        return self.split_holds and self.chained_holds and self.invariants_hold

    def to_json_dict(self) -> dict:
        d = self.decomposition
        return {
            "clique_edges": list(d.clique_edges),
            "matching_edges": list(d.matching_edges),
            "m": d.m,
            "z": list(d.z),
            "x": list(d.x),
            "y": list(d.y),
            "d": d.d,
            "delta_h": d.delta_h,
            "edge_count": self.edge_count,
            "split_bound": str(self.split_bound),
            "chained_bound": str(self.chained_bound),
            "split_holds": self.split_holds,
            "chained_holds": self.chained_holds,
            "invariants_hold": self.invariants_hold,
            "passed": self.passed,
        }


def decomposition_audit(graph: Graph) -> DecompositionAudit:
    """Audit the matching-split edge count bounds on this graph's maximum
    strong clique. Requires max degree >= 1."""
    if max_degree(graph) < 1:
        raise ValueError("decomposition audit requires max degree >= 1")
    _, witness = strong_clique_number(graph)
    s_ids = witness.edges
    sub = Graph(graph.n, tuple(graph.endpoints(e) for e in s_ids))
    matching = maximum_matching(sub)
    m = matching.size
    matched = matching.vertices
    z = frozenset(range(graph.n)) - matched
    xs = []
    ys = []
    for v in sorted(matched):
        z_neighbors = sum(1 for w in sub.neighbors[v] if w in z)
        if z_neighbors >= 1:
            xs.append(v)
        if z_neighbors >= 2:
            ys.append(v)
    outside_y = [v for v in sorted(matched) if v not in set(ys)]
    d = max(sub.degree(v) for v in outside_y)
    delta_h = max_degree(sub)

    edge_count = sub.m
    y_size = len(ys)
    split_bound = y_size * (Fraction(2 * delta_h - d, 2) - 1) + m * (d + 1)
    chained_bound = m * delta_h + Fraction(m * d, 2)

    one_y_endpoint = all(
        (u in set(ys)) + (v in set(ys)) <= 1 for u, v in matching.pairs
    )
    invariants = (
        set(ys) <= set(xs) <= matched
        and y_size <= m
        and d <= min(2 * m, delta_h)
        and one_y_endpoint
    )
    matching_host_ids = tuple(sorted(s_ids[e] for e in matching.edge_ids))
    return DecompositionAudit(
        decomposition=MatchingDecomposition(
            clique_edges=tuple(s_ids),
            matching_edges=matching_host_ids,
            m=m,
            z=tuple(sorted(z)),
            x=tuple(xs),
            y=tuple(ys),
            d=d,
            delta_h=delta_h,
        ),
        edge_count=edge_count,
        split_bound=split_bound,
        chained_bound=chained_bound,
        split_holds=edge_count <= split_bound,
        chained_holds=edge_count <= chained_bound,
        invariants_hold=invariants,
    )


# ---------------------------------------------------------------------------
# Batch verification
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BatchSummary:
    total_graphs: int
    checks: int
    applicable: int
    holds: int
    tight: int
    counterexamples: int
    max_ratio: str | None
    reports: tuple[dict, ...]
    counterexample_entries: tuple[dict, ...]

    def to_json_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "kind": "batch_summary",
            "total_graphs": self.total_graphs,
            "checks": self.checks,
            "applicable": self.applicable,
            "holds": self.holds,
            "tight": self.tight,
            "counterexamples": self.counterexamples,
            "max_sc_to_bound_ratio": self.max_ratio,
            "reports": list(self.reports),
        }

    def to_text(self) -> str:
        lines = [
            f"graphs checked: {self.total_graphs}",
            f"checks run: {self.checks}",
            f"applicable: {self.applicable}",
            f"holds: {self.holds} (tight: {self.tight})",
            f"counterexamples: {self.counterexamples}",
        ]
        if self.max_ratio is not None:
            lines.append(f"max SC/bound ratio: {self.max_ratio}")
        return "\n".join(lines)


def _verify_serialized(item: tuple[int, str | None, str, tuple]) -> tuple[int, list[dict]]:
    index, name, g6, spec_items = item
    graph = from_graph6(g6)
    sc, witness = strong_clique_number(graph)
    out = []
    for identifier, k in spec_items:
        spec = BoundSpec(identifier, k)
        report = _verify_known_sc(graph, spec, sc, witness, name, time.perf_counter())
        out.append(report.to_json_dict())
    return index, out


def batch_verify(
    graphs: Iterable[Graph | tuple[str, Graph]],
    specs: Iterable[BoundSpec],
    workers: int = 1,
    evidence_dir: str | None = None,
) -> BatchSummary:
    """Verify every graph against every spec; the summary is independent
    of the worker count (results are merged in input order)."""
    spec_list = list(specs)
    spec_items = tuple((s.identifier, s.k) for s in spec_list)
    items = []
    for index, entry in enumerate(graphs):
        if isinstance(entry, Graph):
            name, graph = None, entry
        else:
            name, graph = entry
        items.append((index, name, to_graph6(graph), spec_items))

    if workers > 1 and len(items) > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=workers) as pool:
            produced = list(pool.map(_verify_serialized, items, chunksize=16))
        produced.sort(key=lambda t: t[0])
        report_lists = [reports for _, reports in produced]
    else:
        report_lists = [_verify_serialized(item)[1] for item in items]

    reports: list[dict] = []
    counter_entries: list[dict] = []
    applicable = holds = tight = counterexamples = 0
    max_ratio: Fraction | None = None
    for report_list in report_lists:
        for rep in report_list:
            reports.append(rep)
            if not rep["applicable"]:
                continue
            applicable += 1
            if rep["status"] == "holds":
                holds += 1
            if rep["tight"]:
                tight += 1
            if rep["bound"] and rep["bound"] > 0:
                ratio = Fraction(rep["strong_clique_number"], rep["bound"])
                if max_ratio is None or ratio > max_ratio:
                    max_ratio = ratio
            if rep["status"] == "COUNTEREXAMPLE":
                counterexamples += 1
                counter_entries.append(rep)

    if evidence_dir is not None and counter_entries:
        import json
        import os

        os.makedirs(evidence_dir, exist_ok=True)
        with open(os.path.join(evidence_dir, "counterexamples.g6"), "w") as fh:
            for rep in counter_entries:
                fh.write(rep["graph6"] + "\n")
        with open(os.path.join(evidence_dir, "counterexamples.json"), "w") as fh:
            json.dump(counter_entries, fh, indent=2)
            fh.write("\n")

    return BatchSummary(
        total_graphs=len(items),
        checks=len(reports),
        applicable=applicable,
        holds=holds,
        tight=tight,
        counterexamples=counterexamples,
        max_ratio=str(max_ratio) if max_ratio is not None else None,
        reports=tuple(reports),
        counterexample_entries=tuple(counter_entries),
    )

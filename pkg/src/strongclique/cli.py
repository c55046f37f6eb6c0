"""Command-line front end.

Subcommands: sc, distance, free, generate, verify, witness, enumerate.
Reports go to stdout (human-readable by default, structured with --json)
and always echo the effective configuration, so identical invocations on
identical inputs produce byte-identical output. Exit codes: 0 success,
1 usage or input error, 2 a counterexample was found by verify.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import generators
from .graph import (
    Graph,
    edge_induced_subgraph,
    from_edgelist,
    from_graph6,
    max_degree,
    to_graph6,
)
from .matching import Matching, maximum_matching
from .strong import edge_distance, is_strong_clique, strong_clique_number
from .cycles import is_free
from .verifier import SCHEMA_VERSION, BoundSpec, batch_verify, decomposition_audit
from .witness import (
    cycle_through_matching,
    find_xm_path,
    path_through_matching,
    s_minimal_reduce,
    check_minimal_properties,
)


class _CliError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r") as fh:
            return fh.read()
    except OSError as exc:
        raise _CliError(f"cannot read input {path!r}: {exc}") from None


def _load_graphs(path: str, fmt: str) -> list[tuple[str, Graph]]:
    text = _read_text(path)
    if fmt == "edgelist":
        try:
            return [("graph0", from_edgelist(text))]
        except ValueError as exc:
            raise _CliError(f"{path}: {exc}") from None
    graphs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        try:
            graphs.append((f"line{lineno}", from_graph6(line)))
        except ValueError as exc:
            raise _CliError(f"{path}:{lineno}: {exc}") from None
    return graphs


def _emit(document: dict, as_json: bool, text_lines: list[str]) -> None:
    if as_json:
        print(json.dumps(document, indent=2))
    else:
        print(f"config: {json.dumps(document['config'], sort_keys=True)}")
        for line in text_lines:
            print(line)


def _document(command: str, config: dict, results) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "tool": "strongclique",
        "command": command,
        "config": config,
        "results": results,
    }


def _parse_lengths(text: str) -> list[int]:
    try:
        lengths = [int(part) for part in text.split(",") if part.strip() != ""]
    except ValueError:
        raise _CliError(f"invalid --lengths value {text!r}") from None
    if not lengths:
        raise _CliError("--lengths must list at least one cycle length")
    return lengths


def _parse_edge_csv(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip() != ""]
    except ValueError:
        raise _CliError(f"invalid edge id list {text!r}") from None


def _parse_specs(values: list[str], default_k: int | None) -> list[BoundSpec]:
    specs = []
    for value in values:
        if ":" in value:
            ident, _, ktext = value.partition(":")
            try:
                k: int | None = int(ktext)
            except ValueError:
                raise _CliError(f"invalid spec parameter in {value!r}") from None
        else:
            ident, k = value, default_k
        ident = ident.upper()
        try:
            from .verifier import BOUND_RULES

            needs_k = BOUND_RULES[ident].k_min is not None if ident in BOUND_RULES else False
            specs.append(BoundSpec(ident, k if needs_k else None))
        except ValueError as exc:
            raise _CliError(str(exc)) from None
    return specs


def _pipeline_matching(graph: Graph, edge_ids: list[int] | None) -> Matching:
    """Matching used by the witness subcommand: an explicit edge list, or
    else a maximum matching of the maximum strong clique's subgraph."""
    if edge_ids is not None:
        return Matching(graph, edge_ids)
    _, witness = strong_clique_number(graph)
    proj = edge_induced_subgraph(graph, witness.edges)
    inner = maximum_matching(proj.graph)
    back = {new: old for old, new in proj.edge_map.items()}
    return Matching(graph, [back[e] for e in inner.edge_ids])


def _cmd_sc(args) -> int:
    graphs = _load_graphs(args.input, args.format)
    results = []
    lines = []
    for name, graph in graphs:
        sc, witness = strong_clique_number(graph)
        results.append(
            {
                "graph": name,
                "graph6": to_graph6(graph),
                "n": graph.n,
                "m": graph.m,
                "max_degree": max_degree(graph),
                "strong_clique_number": sc,
                "witness_edges": list(witness.edges),
            }
        )
        lines.append(f"{name}: SC={sc} witness_edges={list(witness.edges)}")
    config = {"command": "sc", "input": args.input, "format": args.format}
    _emit(_document("sc", config, results), args.json, lines)
    return 0


def _cmd_distance(args) -> int:
    graphs = _load_graphs(args.input, args.format)
    results = []
    lines = []
    for name, graph in graphs:
        try:
            dist = edge_distance(graph, args.e1, args.e2)
        except ValueError as exc:
            raise _CliError(f"{name}: {exc}") from None
        encoded = "infinity" if dist == float("inf") else int(dist)
        results.append({"graph": name, "e1": args.e1, "e2": args.e2, "distance": encoded})
        lines.append(f"{name}: distance({args.e1}, {args.e2}) = {encoded}")
    config = {
        "command": "distance",
        "input": args.input,
        "format": args.format,
        "e1": args.e1,
        "e2": args.e2,
    }
    _emit(_document("distance", config, results), args.json, lines)
    return 0


def _cmd_free(args) -> int:
    lengths = _parse_lengths(args.lengths)
    graphs = _load_graphs(args.input, args.format)
    results = []
    lines = []
    for name, graph in graphs:
        try:
            free, witness = is_free(graph, lengths)
        except ValueError as exc:
            raise _CliError(str(exc)) from None
        entry = {"graph": name, "lengths": lengths, "free": free}
        if witness is not None:
            entry["witness_cycle"] = list(witness.vertices)
            lines.append(f"{name}: found C{witness.length} {list(witness.vertices)}")
        else:
            lines.append(f"{name}: free of cycle lengths {lengths}")
        results.append(entry)
    config = {
        "command": "free",
        "input": args.input,
        "format": args.format,
        "lengths": lengths,
    }
    _emit(_document("free", config, results), args.json, lines)
    return 0


_GENERATOR_PARAM_NAMES = ("t", "q", "p", "k", "a", "b", "n", "m")


def _cmd_generate(args) -> int:
    jobs: list[generators.GeneratorSpec] = []
    if args.jobs:
        try:
            raw = json.loads(_read_text(args.jobs))
        except json.JSONDecodeError as exc:
            raise _CliError(f"invalid jobs file: {exc}") from None
        if not isinstance(raw, list):
            raise _CliError("jobs file must contain a JSON list")
        for item in raw:
            params = {
                key: value
                for key, value in item.items()
                if key in _GENERATOR_PARAM_NAMES
            }
            jobs.append(
                generators.GeneratorSpec(
                    family=item["family"],
                    params=params,
                    probability=item.get("prob"),
                    seed=item.get("seed"),
                )
            )
    else:
        if not args.family:
            raise _CliError("generate needs --family or --jobs")
        params = {
            key: getattr(args, key)
            for key in _GENERATOR_PARAM_NAMES
            if getattr(args, key) is not None
        }
        jobs.append(
            generators.GeneratorSpec(
                family=args.family,
                params=params,
                probability=args.prob,
                seed=args.seed,
            )
        )
    outputs = []
    for job in jobs:
        try:
            outputs.append(to_graph6(job.build()))
        except (KeyError, ValueError) as exc:
            detail = exc if isinstance(exc, ValueError) else f"missing parameter {exc}"
            raise _CliError(f"generator {job.family!r}: {detail}") from None
    for line in outputs:
        print(line)
    return 0


def _cmd_enumerate(args) -> int:
    try:
        stream = generators.enumerate_graphs(
            args.n, dedup=args.dedup, start=args.start, stop=args.stop
        )
        for graph in stream:
            print(to_graph6(graph))
    except ValueError as exc:
        raise _CliError(str(exc)) from None
    return 0


def _cmd_verify(args) -> int:
    graphs = _load_graphs(args.input, args.format)
    config = {
        "command": "verify",
        "input": args.input,
        "format": args.format,
        "specs": args.spec,
        "k": args.k,
        "workers": args.workers,
        "audit": args.audit,
        "evidence_dir": args.evidence_dir,
    }
    if args.audit:
        results = []
        lines = []
        for name, graph in graphs:
            try:
                audit = decomposition_audit(graph)
            except ValueError as exc:
                raise _CliError(f"{name}: {exc}") from None
            entry = {"graph": name, **audit.to_json_dict()}
            results.append(entry)
            lines.append(
                f"{name}: |E(H)|={audit.edge_count} split_bound={audit.split_bound} "
                f"passed={audit.passed}"
            )
        _emit(_document("verify", config, results), args.json, lines)
        return 0 if all(r["passed"] for r in results) else 2

    if not args.spec:
        raise _CliError("verify needs at least one --spec (or --audit)")
    specs = _parse_specs(args.spec, args.k)
    summary = batch_verify(
        graphs, specs, workers=args.workers, evidence_dir=args.evidence_dir
    )
    document = _document("verify", config, summary.to_json_dict())
    lines = [summary.to_text()]
    for rep in summary.reports:
        label = rep["spec"]["identifier"]
        if rep["spec"]["k"] is not None:
            label += f"(k={rep['spec']['k']})"
        lines.append(
            f"{rep['graph']}: {label} SC={rep['strong_clique_number']} "
            f"bound={rep['bound']} -> {rep['status']}"
        )
    _emit(document, args.json, lines)
    return 2 if summary.counterexamples else 0


def _cmd_witness(args) -> int:
    graphs = _load_graphs(args.input, args.format)
    edge_ids = _parse_edge_csv(args.edges) if args.edges else None
    results = []
    lines = []
    for name, graph in graphs:
        try:
            if args.op == "minimize":
                ids = edge_ids
                if ids is None:
                    ids = list(strong_clique_number(graph)[1].edges)
                reduction = s_minimal_reduce(graph, ids)
                is_max = len(ids) == strong_clique_number(graph)[0]
                report = check_minimal_properties(
                    reduction.graph, reduction.clique_edges, is_max
                )
                entry = {
                    "graph": name,
                    "op": "minimize",
                    "reduced_graph6": to_graph6(reduction.graph),
                    "surviving_clique_edges": list(reduction.clique_edges),
                    "vertex_map": {str(k): v for k, v in sorted(reduction.vertex_map.items())},
                    "minimal_properties_pass": report.all_passed,
                }
                lines.append(
                    f"{name}: minimized to n={reduction.graph.n} m={reduction.graph.m} "
                    f"properties_pass={report.all_passed}"
                )
            elif args.op in ("path", "cycle"):
                matching = _pipeline_matching(graph, edge_ids)
                if args.op == "path":
                    path = path_through_matching(graph, matching)
                    entry = {
                        "graph": name,
                        "op": "path",
                        "matching_edges": list(matching.edge_ids),
                        "path_vertices": path,
                    }
                    lines.append(f"{name}: path through matching = {path}")
                else:
                    cycle, used = cycle_through_matching(graph, matching)
                    entry = {
                        "graph": name,
                        "op": "cycle",
                        "matching_edges": list(matching.edge_ids),
                        "cycle_vertices": list(cycle.vertices),
                        "matching_edges_used": used,
                    }
                    lines.append(
                        f"{name}: cycle {list(cycle.vertices)} uses {used} matching edges"
                    )
            elif args.op == "xm-path":
                if args.x is None or args.len is None:
                    raise _CliError("xm-path needs --x and --len")
                matching = _pipeline_matching(graph, edge_ids)
                found = find_xm_path(graph, matching, args.x, args.len)
                entry = {
                    "graph": name,
                    "op": "xm-path",
                    "matching_edges": list(matching.edge_ids),
                    "x": args.x,
                    "length": args.len,
                    "found": found is not None,
                }
                if found is not None:
                    entry["path_vertices"] = list(found.vertices)
                    lines.append(f"{name}: xm-path {list(found.vertices)}")
                else:
                    lines.append(f"{name}: no xm-path of length {args.len}")
            else:
                raise _CliError(f"unknown witness op {args.op!r}")
        except ValueError as exc:
            raise _CliError(f"{name}: {exc}") from None
        results.append(entry)
    config = {
        "command": "witness",
        "input": args.input,
        "format": args.format,
        "op": args.op,
        "edges": args.edges,
        "x": args.x,
        "len": args.len,
    }
    _emit(_document("witness", config, results), args.json, lines)
    return 0


def _build_parser() -> _Parser:
    parser = _Parser(prog="strongclique", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_io(p):
        p.add_argument("--input", default="-", help="input path or - for stdin")
        p.add_argument("--format", choices=("graph6", "edgelist"), default="graph6")
        p.add_argument("--json", action="store_true", help="machine-readable output")

    p_sc = sub.add_parser("sc", help="strong clique number with witness")
    add_io(p_sc)
    p_sc.set_defaults(func=_cmd_sc)

    p_dist = sub.add_parser("distance", help="distance between two edges")
    add_io(p_dist)
    p_dist.add_argument("--e1", type=int, required=True)
    p_dist.add_argument("--e2", type=int, required=True)
    p_dist.set_defaults(func=_cmd_distance)

    p_free = sub.add_parser("free", help="forbidden cycle check with witness")
    add_io(p_free)
    p_free.add_argument("--lengths", required=True, help="comma-separated lengths")
    p_free.set_defaults(func=_cmd_free)

    p_gen = sub.add_parser("generate", help="emit family graphs as graph6")
    p_gen.add_argument("--family")
    p_gen.add_argument("--jobs", help="JSON list of generator jobs")
    for pname in _GENERATOR_PARAM_NAMES:
        p_gen.add_argument(f"--{pname}", type=int)
    p_gen.add_argument("--prob", type=float)
    p_gen.add_argument("--seed", type=int)
    p_gen.set_defaults(func=_cmd_generate)

    p_enum = sub.add_parser("enumerate", help="stream labeled graphs as graph6")
    p_enum.add_argument("--n", type=int, required=True)
    p_enum.add_argument("--dedup", action="store_true")
    p_enum.add_argument("--start", type=int, default=0)
    p_enum.add_argument("--stop", type=int, default=None)
    p_enum.set_defaults(func=_cmd_enumerate)

    p_verify = sub.add_parser("verify", help="check bound specifications")
    add_io(p_verify)
    p_verify.add_argument(
        "--spec",
        action="append",
        default=[],
        help="bound identifier, optionally ID:k; repeatable",
    )
    p_verify.add_argument("--k", type=int, default=None)
    p_verify.add_argument("--workers", type=int, default=1)
    p_verify.add_argument("--evidence-dir", default=None)
    p_verify.add_argument(
        "--audit", action="store_true", help="run the decomposition audit instead"
    )
    p_verify.set_defaults(func=_cmd_verify)

    p_wit = sub.add_parser("witness", help="constructive witnesses")
    add_io(p_wit)
    p_wit.add_argument(
        "--op", required=True, choices=("path", "cycle", "minimize", "xm-path")
    )
    p_wit.add_argument("--edges", help="comma-separated edge ids")
    p_wit.add_argument("--x", type=int, default=None)
    p_wit.add_argument("--len", type=int, default=None)
    p_wit.set_defaults(func=_cmd_witness)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except _CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except BrokenPipeError:
        return 1


if __name__ == "__main__":
    sys.exit(main())

"""Command-line interface: ``linkless <command> [options] INPUT...``.

Exit status is 0 on success, 2 on unreadable or malformed input, 3 when a
size cap is exceeded.  Every option can also be set through an environment
variable named ``LINKLESS_<OPTION>`` (for example ``LINKLESS_CAP_VERTICES``);
command-line flags win.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field

from .diagram import OVER_RULES, conway_gordon_sum, convex_diagram, diagram_from_dict, disjoint_cycle_pairs
from .errors import GraphInputError, ParseError, ResourceLimitError
from .exchange import petersen_family
from .graph import DEFAULT_CYCLE_CAP, Graph, enumerate_cycles, simplify, vertex_connectivity
from .io import parse_graph, to_graph6
from .minor import DEFAULT_MINOR_CAP, has_minor, is_linklessly_embeddable
from .web import DEFAULT_WEB_CAP, build_web, is_connected_web

COMMANDS = ("decide", "family", "web", "invariant", "minor", "cycles")
DEFAULT_CAPS = {"decide": DEFAULT_MINOR_CAP, "minor": DEFAULT_MINOR_CAP, "web": DEFAULT_WEB_CAP,
                "cycles": DEFAULT_CYCLE_CAP, "invariant": DEFAULT_CYCLE_CAP, "family": None}

EXIT_OK, EXIT_PARSE, EXIT_CAP = 0, 2, 3


@dataclass
class RunConfig:
    command: str
    inputs: list[str] = field(default_factory=list)
    format: str = "auto"
    cap_vertices: int | None = None
    cap_cycles: int = DEFAULT_CYCLE_CAP
    seed: int = 0
    order: list[int] | None = None
    over_rule: str = "lex"
    assignment: str | None = None
    output: str | None = None
    dot: str | None = None

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ValueError(f"unknown command {self.command!r}")
        if self.cap_vertices is not None and self.cap_vertices <= 0:
            raise ValueError("caps must be positive")
        if self.cap_cycles <= 0:
            raise ValueError("caps must be positive")

    @property
    def vertex_cap(self) -> int | None:
        if self.cap_vertices is not None:
            return self.cap_vertices
        if self.command in ("cycles", "invariant"):
            return self.cap_cycles
        return DEFAULT_CAPS[self.command]

    @property
    def output_mode(self) -> str:
        return self.output or ("text" if self.command == "family" else "json")


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="ascii", errors="strict") as fh:
        return fh.read()


def _load(cfg: RunConfig, i: int) -> tuple[Graph, list[int]]:
    try:
        text = _read(cfg.inputs[i])
    except IndexError:
        raise ParseError(f"command {cfg.command!r} needs {i + 1} input file(s)") from None
    except (OSError, UnicodeDecodeError) as exc:
        raise ParseError(f"cannot read {cfg.inputs[i]}: {exc}") from None
    return parse_graph(text, cfg.format)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _model_json(g: Graph, h: Graph, model, labels):
    return {
        "branch_sets": [sorted(labels[v] for v in model.branch_sets[p]) for p in h.vertices],
        "edge_map": [[labels[x] for x in g.endpoints(model.edge_map[f])] for _, _, f in h.edges],
    }


def _decide(cfg):
    g, labels = _load(cfg, 0)
    verdict = is_linklessly_embeddable(g, cap=cfg.vertex_cap)
    report = {"embeddable": verdict.embeddable, "family_member": verdict.family_member,
              "branch_sets": [], "edge_map": []}
    if not verdict.embeddable:
        member = petersen_family()[verdict.family_member - 1]
        report.update(_model_json(g, member, verdict.model, labels))
    if cfg.output_mode == "text":
        if verdict.embeddable:
            return "linklessly embeddable: no Petersen-family minor\n"
        return f"not linklessly embeddable: minor of Petersen-family member {verdict.family_member}\n"
    return _dump(report)


def _family(cfg):
    members = petersen_family()
    if cfg.output_mode == "text":
        return "".join(to_graph6(g) + "\n" for g in members)
    return _dump({"members": [
        {"index": i, "graph6": to_graph6(g), "vertices": g.n, "edges": g.m,
         "degree_sequence": sorted(g.degrees().values(), reverse=True)}
        for i, g in enumerate(members, 1)]})


def _web(cfg):
    g, labels = _load(cfg, 0)
    s = simplify(g)
    w = build_web(s, cap=cfg.vertex_cap)
    connected = is_connected_web(w)
    kappa = vertex_connectivity(s)
    if cfg.dot:
        with open(cfg.dot, "w") as fh:
            fh.write(w.to_dot())
    if cfg.output_mode == "text":
        return (f"{len(w.nodes)} Kuratowski subgraphs, {len(w.adjacency)} adjacent pairs, "
                f"web {'connected' if connected else 'disconnected'}, graph {kappa}-connected\n")
    report = w.to_dict(labels)
    for node in report["nodes"]:
        node["edges"] = [[labels[x] for x in s.endpoints(e)] for e in node["edges"]]
    report["connected"] = connected
    report["vertex_connectivity"] = kappa
    return _dump(report)


def _invariant(cfg):
    g, labels = _load(cfg, 0)
    s = simplify(g)
    index = {lab: i for i, lab in enumerate(labels)}
    if cfg.assignment:
        data = json.loads(_read(cfg.assignment))
        if isinstance(data, dict):
            data = dict(data, order=[index[x] for x in data["order"]])
            d = diagram_from_dict(s, data)
        else:
            order = [index[x] for x in cfg.order] if cfg.order else None
            d = convex_diagram(s, order, assignment=data)
    else:
        order = [index[x] for x in cfg.order] if cfg.order else None
        d = convex_diagram(s, order, rule=cfg.over_rule, seed=cfg.seed)
    value = conway_gordon_sum(d, cap=cfg.vertex_cap)
    pairs = len(disjoint_cycle_pairs(s, cap=cfg.vertex_cap))
    if cfg.output_mode == "text":
        return f"{int(value)}\n"
    diagram = d.to_dict()
    diagram["order"] = [labels[v] for v in diagram["order"]]
    return _dump({"conway_gordon_sum": int(value), "disjoint_cycle_pairs": pairs, "diagram": diagram})


def _minor(cfg):
    g, glabels = _load(cfg, 0)
    h, _ = _load(cfg, 1)
    model = has_minor(g, h, cap=cfg.vertex_cap)
    if cfg.output_mode == "text":
        return "minor\n" if model else "not a minor\n"
    report = {"minor": model is not None, "branch_sets": [], "edge_map": []}
    if model is not None:
        report.update(_model_json(g, h, model, glabels))
    return _dump(report)


def _cycles(cfg):
    g, labels = _load(cfg, 0)
    cycles = enumerate_cycles(simplify(g), cap=cfg.vertex_cap)
    rows = [[labels[v] for v in c] for c in cycles]
    if cfg.output_mode == "text":
        return "".join(" ".join(map(str, r)) + "\n" for r in rows)
    return _dump({"count": len(rows), "cycles": rows})


HANDLERS = {"decide": _decide, "family": _family, "web": _web,
            "invariant": _invariant, "minor": _minor, "cycles": _cycles}


def run(cfg: RunConfig) -> tuple[int, str]:
    """Execute one command; returns (exit status, report text)."""
    try:
        return EXIT_OK, HANDLERS[cfg.command](cfg)
    except ParseError as exc:
        return EXIT_PARSE, f"parse error: {exc}\n"
    except ResourceLimitError as exc:
        return EXIT_CAP, f"cap exceeded: {exc}\n"
    except (GraphInputError, KeyError, ValueError) as exc:
        return EXIT_PARSE, f"input error: {exc}\n"


def _env(name, default=None):
    return os.environ.get("LINKLESS_" + name.upper().replace("-", "_"), default)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="linkless", description="Linkless embeddability and related invariants.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("inputs", nargs="*", help="graph files (edge list or graph6); '-' reads stdin")
    p.add_argument("--format", choices=("auto", "graph6", "edge-list"), default=_env("format", "auto"))
    p.add_argument("--cap-vertices", type=int, default=_env("cap_vertices"))
    p.add_argument("--cap-cycles", type=int, default=_env("cap_cycles", DEFAULT_CYCLE_CAP))
    p.add_argument("--seed", type=int, default=_env("seed", 0))
    p.add_argument("--order", default=_env("order"), help="comma-separated cyclic vertex order")
    p.add_argument("--over-rule", choices=OVER_RULES, default=_env("over_rule", "lex"))
    p.add_argument("--assignment", default=_env("assignment"),
                   help="diagram JSON, or a JSON list of 'a'/'b' per crossing")
    p.add_argument("--output", choices=("json", "text"), default=_env("output"))
    p.add_argument("--dot", default=_env("dot"), help="write the Kuratowski web as DOT (web only)")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        order = [int(x) for x in args.order.split(",")] if args.order else None
        cfg = RunConfig(command=args.command, inputs=args.inputs, format=args.format,
                        cap_vertices=None if args.cap_vertices is None else int(args.cap_vertices),
                        cap_cycles=int(args.cap_cycles), seed=int(args.seed), order=order,
                        over_rule=args.over_rule, assignment=args.assignment,
                        output=args.output, dot=args.dot)
    except ValueError as exc:
        sys.stderr.write(f"input error: {exc}\n")
        return EXIT_PARSE
    status, text = run(cfg)
    (sys.stdout if status == EXIT_OK else sys.stderr).write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())

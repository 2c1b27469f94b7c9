"""Command-line entry point: compute, verify, generate, census, batch."""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from functools import partial
from pathlib import Path

from . import families as fam
from . import harness
from .coloring import Coloring, is_nl
from .graph import (
    Graph,
    Graph6Error,
    cartesian_product,
    complete_split,
    disjoint_union,
    from_graph6,
    join,
    make,
    mycielski,
    to_graph6,
)
from .solver import Budget, chi_nl_exact

EXIT_OK, EXIT_REJECTED, EXIT_USAGE, EXIT_INDETERMINATE = 0, 1, 2, 3

_SIMPLE = {"path": 1, "cycle": 1, "complete": 1, "empty": 1, "star": 1}
_BINARY = {"join": join, "union": disjoint_union, "product": cartesian_product}


class SpecError(ValueError):
    pass


def _int(tok: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise SpecError(f"expected an integer, got {tok!r}") from None


def _parse(tokens: list[str], pos: int) -> tuple[Graph, int]:
    if pos >= len(tokens):
        raise SpecError("family spec ended early")
    kind = tokens[pos].lower()
    pos += 1
    if kind in _SIMPLE:
        args = [_int(t) for t in tokens[pos:pos + 1]]
        if len(args) != 1:
            raise SpecError(f"{kind} needs one integer")
        return make(kind, args), pos + 1
    if kind in ("multipartite", "complete_multipartite"):
        sizes = []
        while pos < len(tokens) and tokens[pos].lstrip("-").isdigit():
            sizes.append(_int(tokens[pos]))
            pos += 1
        if not sizes or min(sizes) < 1:
            raise SpecError("multipartite needs positive part sizes")
        return make("multipartite", sizes), pos
    if kind == "split":
        if pos + 2 > len(tokens):
            raise SpecError("split needs clique and independent sizes")
        return complete_split(_int(tokens[pos]), _int(tokens[pos + 1])), pos + 2
    if kind == "gk":
        if pos >= len(tokens):
            raise SpecError("gk needs k")
        return fam.generate_gk(_int(tokens[pos]))[0], pos + 1
    if kind == "graph6":
        if pos >= len(tokens):
            raise SpecError("graph6 needs a string")
        return from_graph6(tokens[pos]), pos + 1
    if kind == "mycielski":
        g, pos = _parse(tokens, pos)
        return mycielski(g), pos
    if kind in _BINARY:
        g, pos = _parse(tokens, pos)
        h, pos = _parse(tokens, pos)
        return _BINARY[kind](g, h), pos
    raise SpecError(f"unknown family {kind!r}")


def parse_graph(tokens: list[str]) -> Graph:
    """A family spec such as ``join path 3 cycle 4``, or a bare graph6 string."""
    if len(tokens) == 1 and tokens[0].lower() not in _SIMPLE:
        try:
            return from_graph6(tokens[0])
        except Graph6Error:
            pass
    g, pos = _parse(tokens, 0)
    if pos != len(tokens):
        raise SpecError(f"unexpected trailing input: {' '.join(tokens[pos:])}")
    return g


def _budget(args) -> Budget | None:
    if args.budget_nodes is None and args.budget_seconds is None:
        return None
    return Budget(max_nodes=args.budget_nodes, max_seconds=args.budget_seconds)


def _workers(args) -> int:
    if args.workers is not None:
        return max(1, args.workers)
    env = os.environ.get("NLCHROMA_WORKERS")
    return max(1, int(env)) if env and env.isdigit() else 1


def _print_result(g: Graph, result, fmt: str) -> None:
    if fmt == "records":
        print(json.dumps(result.to_record(g), sort_keys=True))
        return
    if result.indeterminate:
        print(f"chi_nl=indeterminate lower={result.lower} upper={result.upper}")
    else:
        print(f"chi_nl={result.chi_nl}")
    if result.witness is not None:
        print(f"witness={result.witness.to_line()}")
    print(f"certificate={result.certificate}")
    print(f"rule={result.rule}")
    print(f"nodes={result.nodes_explored}")


def cmd_compute(args) -> int:
    g = parse_graph(args.graph)
    result = chi_nl_exact(g, _budget(args))
    _print_result(g, result, args.format)
    return EXIT_INDETERMINATE if result.indeterminate else EXIT_OK


def cmd_verify(args) -> int:
    if len(args.graph) < 1:
        raise SpecError("verify needs a graph and a colouring line")
    g = parse_graph(args.graph)
    c = Coloring.parse(args.coloring)
    if c.n != g.n:
        raise SpecError(f"colouring has {c.n} entries, graph has {g.n} vertices")
    verdict = is_nl(g, c)
    if args.format == "records":
        rec = {"graph6": to_graph6(g), "accepted": verdict.accepted, "reason": verdict.reason,
               "pair": list(verdict.pair) if verdict.pair else None}
        print(json.dumps(rec, sort_keys=True))
    else:
        print(verdict.describe())
    return EXIT_OK if verdict else EXIT_REJECTED


def cmd_generate(args) -> int:
    g = parse_graph(args.graph)
    print(to_graph6(g))
    if args.sidecar:
        if args.graph[0].lower() != "gk" or len(args.graph) != 2:
            raise SpecError("--sidecar applies to a plain 'gk k' spec")
        spec = fam.generate_gk(_int(args.graph[1]))[2]
        Path(args.sidecar).write_text(spec.sidecar(), encoding="utf-8")
    return EXIT_OK


def _census_config(args) -> dict:
    cfg = {}
    if args.config:
        cfg = json.loads(Path(args.config).read_text(encoding="utf-8"))
    for key in ("seed", "n7_sample"):
        value = getattr(args, key)
        if value is not None:
            cfg[key] = value
    if args.full_n7:
        cfg["n7_sample"] = None
    if args.workers is not None or "workers" not in cfg:
        cfg["workers"] = _workers(args)
    return cfg


def cmd_census(args) -> int:
    cfg = _census_config(args)
    checks = args.checks or cfg.get("checks") or ["all"]
    reports = harness.run_census(
        args.n_max,
        None if checks == ["all"] else checks,
        seed=cfg.get("seed", 0),
        workers=cfg.get("workers", 1),
        n7_sample=cfg.get("n7_sample", harness.N7_SAMPLE),
    )
    lines = harness.report_lines(reports)
    if args.output:
        Path(args.output).write_text("".join(line + "\n" for line in lines), encoding="utf-8")
    if args.format == "records":
        print("\n".join(lines))
    else:
        print(harness.summary_table(reports))
        for r in reports:
            for v in r.violations:
                print(f"VIOLATION {r.check_id} {v['graph6']}: {v['detail']}")
    return EXIT_REJECTED if any(r.violations for r in reports) else EXIT_OK


def _solve_record(g: Graph, budget: Budget | None) -> dict:
    return chi_nl_exact(g, budget).to_record(g)


def cmd_batch(args) -> int:
    entries = list(harness.ingest_corpus(args.corpus))
    graphs = [g for _, g, err in entries if err is None]
    solved = iter(harness._pmap(partial(_solve_record, budget=_budget(args)), graphs, _workers(args)))
    status = EXIT_OK
    out = []
    for lineno, g, err in entries:
        if err is not None:
            out.append({"line": lineno, "error": err})
            status = EXIT_USAGE
            continue
        rec = {"line": lineno, **next(solved)}
        if rec["status"] == "indeterminate" and status == EXIT_OK:
            status = EXIT_INDETERMINATE
        out.append(rec)
    for rec in out:
        if args.format == "records":
            print(json.dumps(rec, sort_keys=True))
        elif "error" in rec:
            print(f"{args.corpus}:{rec['line']}: error: {rec['error']}")
        else:
            value = rec["chi_nl"] if rec["status"] == "exact" else f"[{rec['lower']},{rec['upper']}]"
            print(f"{rec['line']:>5}  {rec['graph6']}  chi_nl={value}  rule={rec['rule']}")
    return status


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "records"), default="table")
    common.add_argument("--budget-nodes", type=int, default=None)
    common.add_argument("--budget-seconds", type=float, default=None)
    common.add_argument("--workers", type=int, default=None, help="defaults to $NLCHROMA_WORKERS or 1")
    common.add_argument("--seed", type=int, default=None)

    parser = argparse.ArgumentParser(prog="nlchroma", description="Neighbour-locating chromatic number tools.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", parents=[common], help="exact chi_NL of one graph")
    p.add_argument("graph", nargs="+", help="family spec (e.g. 'path 10') or graph6 string")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("verify", parents=[common], help="check a colouring is neighbour-locating")
    p.add_argument("graph", nargs="+")
    p.add_argument("coloring", help="space-separated colour per vertex, e.g. '0 1 0 1 2'")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("generate", parents=[common], help="print a family member as graph6")
    p.add_argument("graph", nargs="+")
    p.add_argument("--sidecar", help="write the G_k vertex/word table here")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("census", parents=[common], help="re-check the structural results on small graphs")
    p.add_argument("n_max", type=int)
    p.add_argument("checks", nargs="*", help=f"check ids or 'all'; known: {', '.join(harness.CHECKS)}")
    p.add_argument("--config", help="JSON file with seed, workers, n7_sample, checks")
    p.add_argument("--n7-sample", type=int, default=None)
    p.add_argument("--full-n7", action="store_true", help="all connected graphs on 7 vertices")
    p.add_argument("--output", help="also write the records to this file")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("batch", parents=[common], help="solve every graph6 line of a file")
    p.add_argument("corpus")
    p.set_defaults(func=cmd_batch)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.ERROR, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except (SpecError, Graph6Error, KeyError, ValueError, OSError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"nlchroma: error: {msg}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

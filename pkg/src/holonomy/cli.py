"""Command-line entry point: ``holonomy <subcommand> --input PATH ...``."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence, TextIO

from holonomy.classification import classify_graph, invariant_steps
from holonomy.converting import (
    ConvertTrajectory,
    Terminal,
    default_budget,
    iterate_convert,
    reverse_convert,
    strip_terminals,
)
from holonomy.enumeration import (
    enumerate_contours,
    enumerate_walks_dfs,
    enumerate_walks_via_converting,
    hamiltonian_circuits,
)
from holonomy.errors import HolonomyError, ParseError
from holonomy.graph import DiGraph, FormKind, classify_matrix, has_parallel_edges
from holonomy.io import (
    build_report,
    export_dot,
    format_steps,
    read_graph,
    sniff_format,
    write_edge_list,
    write_matrix_csv,
)


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="holonomy", description=__doc__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", required=True, help="graph file (.edges or .csv)")
    common.add_argument("--format", choices=("edges", "csv"), help="override format sniffing")
    common.add_argument("--allow-self-loops", action="store_true", help="accept non-zero CSV diagonals")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("validate", parents=[common], help="report the operator-matrix form")

    p = sub.add_parser("convert", parents=[common], help="iterate straight converting")
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--strip-terminals", action="store_true")
    p.add_argument("--out")
    p.add_argument("--dot")
    p.add_argument("--budget", type=int)

    p = sub.add_parser("reverse", parents=[common], help="apply reverse converting")
    p.add_argument("--times", type=int, default=1)
    p.add_argument("--strip-terminals", action="store_true")
    p.add_argument("--out")

    p = sub.add_parser("classify", parents=[common], help="holonomic / heteronomous class")
    p.add_argument("--json")
    p.add_argument("--steps", type=int, default=3, help="trajectory steps recorded in the JSON report")

    p = sub.add_parser("trajectory", parents=[common], help="(step, n, m, nu, canonical) table")
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--budget", type=int)

    p = sub.add_parser("walks", parents=[common], help="enumerate walks, contours or Hamiltonian circuits")
    p.add_argument("--length", type=int)
    p.add_argument("--closed", action="store_true")
    p.add_argument("--hamiltonian", action="store_true")
    p.add_argument("--oracle", choices=("dfs", "convert"), default="dfs")
    p.add_argument("--budget", type=int)
    return parser


def _load(args) -> tuple[DiGraph, bytes]:
    path = Path(args.input)
    try:
        fmt = sniff_format(path, args.format)
        raw = path.read_bytes()
    except (OSError, ValueError) as exc:
        raise UsageError(str(exc)) from exc
    return read_graph(raw.decode("utf-8"), fmt, args.allow_self_loops), raw


def _readable(traj: ConvertTrajectory, step: int) -> dict[str, str]:
    """Dotted tuple labels (sentinel '#' shown as '_'); raw names if they would collide."""
    labels = traj.labels(step)
    names = {v: ".".join(t.replace("#", "_", 1) for t in lab) for v, lab in labels.items()}
    if len(set(names.values())) != len(names):
        return {v: v.replace("#", "_", 1) for v in labels}
    return names


def _write_graph(g: DiGraph, path: str | None, out: TextIO, header: Sequence[str] = ()) -> None:
    if path and Path(path).suffix.lower() == ".csv":
        text = write_matrix_csv(g)
    else:
        text = write_edge_list(g, header)
    if path:
        Path(path).write_text(text, encoding="utf-8")
    else:
        out.write(text)


def cmd_validate(args, out: TextIO) -> int:
    g, _ = _load(args)
    form = classify_matrix(g)
    out.write(f"form={form.name}\n")
    for reason in form.reasons:
        out.write(f"violation {reason}\n")
    if has_parallel_edges(g):
        out.write("warning multiplicity>1 (parallel edges)\n")
    return 0 if form.at_least(FormKind.QUASICANONICAL) else 1


def cmd_convert(args, out: TextIO) -> int:
    g, _ = _load(args)
    traj = iterate_convert(g, args.steps, max_vertices=args.budget)
    final = traj.final
    names = _readable(traj, args.steps) if args.steps else {}
    if args.dot:
        Path(args.dot).write_text(export_dot(final, traj.labels(args.steps)), encoding="utf-8")
    if args.strip_terminals and args.steps:
        prov = traj[args.steps].provenance
        added = [v for v, o in zip(final.vertices, prov) if isinstance(o, Terminal)]
        final = final.subgraph_without(added)
    rendered = final.relabel(names) if names else final
    rec = traj[-1]
    header = [f"converted {args.steps} step(s): n={rec.n} m={rec.m} nu={rec.nu}"]
    _write_graph(rendered, args.out, out, header)
    if args.out:
        out.write(header[0] + "\n")
    return 0


def cmd_reverse(args, out: TextIO) -> int:
    g, _ = _load(args)
    for _ in range(args.times):
        g = reverse_convert(g)
        if args.strip_terminals:
            g = strip_terminals(g)
    _write_graph(g, args.out, out, [f"reverse converted {args.times} time(s): n={g.n} m={g.m}"])
    return 0


def cmd_classify(args, out: TextIO) -> int:
    g, raw = _load(args)
    report = classify_graph(g)
    out.write(f"class={report.graph_class.short}\n")
    out.write(f"j_max={format_steps(invariant_steps(g))}\n")
    stab = report.stabilization_step
    out.write(f"stabilization_step={'none' if stab is None else stab}\n")
    out.write(f"live_contours={len(report.live_contours)}\n")
    out.write(f"critical_intervals={len(report.critical_intervals)}\n")
    for iv in report.critical_intervals:
        out.write(f"critical {' '.join(iv.vertices)} length={iv.length}\n")
    out.write(f"outside_scope={'true' if report.outside_scope else 'false'}\n")
    if args.json:
        try:
            traj = iterate_convert(g, args.steps)
        except HolonomyError:
            traj = None
        doc = build_report(g, report, traj, raw)
        Path(args.json).write_text(json.dumps(doc, indent=2, sort_keys=False) + "\n", encoding="utf-8")
    return 0


def cmd_trajectory(args, out: TextIO) -> int:
    g, _ = _load(args)
    traj = iterate_convert(g, args.steps, max_vertices=args.budget)
    out.write("step n m nu canonical\n")
    for j, s in enumerate(traj.steps):
        out.write(f"{j} {s.n} {s.m} {s.nu} {'yes' if s.canonical else 'no'}\n")
    return 0


def cmd_walks(args, out: TextIO, err: TextIO) -> int:
    g, _ = _load(args)
    budget = args.budget
    if args.hamiltonian:
        ws = hamiltonian_circuits(g, budget, route=args.oracle)
    else:
        if args.length is None:
            raise UsageError("--length is required unless --hamiltonian is given")
        if args.closed:
            ws = enumerate_contours(g, args.length, budget, route=args.oracle)
        elif args.oracle == "convert":
            ws = enumerate_walks_via_converting(g, args.length, budget)
        else:
            ws = enumerate_walks_dfs(g, args.length, budget)
    for w in ws.walks:
        out.write(" ".join(w) + "\n")
    if ws.truncated:
        err.write(f"warning: budget {budget or default_budget()} exhausted, output truncated\n")
    return 0


def run_cli(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    handlers = {
        "validate": cmd_validate,
        "convert": cmd_convert,
        "reverse": cmd_reverse,
        "classify": cmd_classify,
        "trajectory": cmd_trajectory,
    }
    try:
        if args.command == "walks":
            return cmd_walks(args, out, err)
        return handlers[args.command](args, out)
    except UsageError as exc:
        err.write(f"usage error: {exc}\n")
        return 2
    except ParseError as exc:
        err.write(f"error: {exc.code}: {exc}\n")
        return 2
    except HolonomyError as exc:
        err.write(f"error: {exc.code}: {exc}\n")
        return 1


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()

"""Edge-list and matrix-CSV documents, DOT export and JSON reports."""

from __future__ import annotations

import csv
import hashlib
import io
import math
import re
from pathlib import Path
from typing import Mapping, Sequence

from holonomy import __version__
from holonomy.classification import ClassReport, Interval
from holonomy.converting import ConvertTrajectory
from holonomy.errors import ParseError, ReservedToken
from holonomy.graph import DiGraph, classify_matrix, cyclomatic_number

TOKEN = re.compile(r"[A-Za-z0-9_.]+")
DOT_ID = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


def _check_token(tok: str, line: int) -> str:
    if tok.startswith("#"):
        raise ReservedToken(line, f"label {tok!r} begins with '#', which is reserved")
    if not TOKEN.fullmatch(tok):
        raise ParseError(line, f"malformed label {tok!r}")
    return tok


def parse_edge_list(text: str) -> DiGraph:
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(lineno, f"expected 'tail head', got {len(parts)} token(s)")
        edges.append((_check_token(parts[0], lineno), _check_token(parts[1], lineno)))
    return DiGraph.from_edges(edges)


def write_edge_list(g: DiGraph, header: Sequence[str] = ()) -> str:
    """Canonical edge-list text. Isolated vertices are not representable and are dropped."""
    for v in g.vertices:
        _check_token(v, 0)
    lines = [f"# {h}" if h else "#" for h in header]
    lines += [f"{t} {h}" for t, h in g.edges]
    return "".join(line + "\n" for line in lines)


def parse_matrix_csv(text: str, allow_self_loops: bool = False) -> DiGraph:
    rows = [r for r in csv.reader(io.StringIO(text)) if any(c.strip() for c in r)]
    if not rows:
        return DiGraph()
    labels = [c.strip() for c in rows[0][1:]]
    for lab in labels:
        _check_token(lab, 1)
    if len(rows) - 1 != len(labels):
        raise ParseError(1, f"matrix has {len(labels)} columns but {len(rows) - 1} rows")
    matrix = []
    for i, row in enumerate(rows[1:]):
        lineno = i + 2
        if len(row) != len(labels) + 1:
            raise ParseError(lineno, "row length differs from the header")
        if row[0].strip() != labels[i]:
            raise ParseError(lineno, f"row label {row[0].strip()!r} != column label {labels[i]!r}")
        try:
            cells = [int(c) for c in row[1:]]
        except ValueError:
            raise ParseError(lineno, "cells must be non-negative integers") from None
        if any(c < 0 for c in cells):
            raise ParseError(lineno, "cells must be non-negative integers")
        if cells[i] and not allow_self_loops:
            raise ParseError(lineno, f"non-zero diagonal at {labels[i]}")
        matrix.append(cells)
    return DiGraph.from_matrix(labels, matrix)


def write_matrix_csv(g: DiGraph) -> str:
    for v in g.vertices:
        _check_token(v, 0)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow([""] + list(g.vertices))
    for v, row in zip(g.vertices, g.to_matrix()):
        w.writerow([v] + row)
    return buf.getvalue()


def sniff_format(path: str | Path, override: str | None = None) -> str:
    if override:
        return override
    suffix = Path(path).suffix.lower()
    if suffix == ".csv":
        return "csv"
    if suffix == ".edges":
        return "edges"
    raise ValueError(f"cannot infer format from {path!s}; use --format edges|csv")


def read_graph(text: str, fmt: str, allow_self_loops: bool = False) -> DiGraph:
    if fmt == "csv":
        return parse_matrix_csv(text, allow_self_loops)
    return parse_edge_list(text)


def _dot_id(v: str) -> str:
    if DOT_ID.fullmatch(v):
        return v
    return '"' + v.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(g: DiGraph, labels: Mapping[str, Sequence[str]] | None = None) -> str:
    """Deterministic DOT text; tuple labels are rendered joined by a middle dot."""
    lines = ["digraph G {"]
    for v in g.vertices:
        if labels and v in labels:
            text = "·".join(labels[v]).replace('"', '\\"')
            lines.append(f'  {_dot_id(v)} [label="{text}"];')
        else:
            lines.append(f"  {_dot_id(v)};")
    for t, h in g.edges:
        lines.append(f"  {_dot_id(t)} -> {_dot_id(h)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _interval_json(iv: Interval) -> dict:
    return {
        "start": iv.start,
        "end": iv.end,
        "length": iv.length,
        "vertices": list(iv.vertices),
        "start_kind": iv.start_kind.value,
        "end_kind": iv.end_kind.value,
    }


def build_report(
    g: DiGraph,
    report: ClassReport,
    trajectory: ConvertTrajectory | None,
    source: bytes,
) -> dict:
    """Report document; field names are frozen, new fields may only be added."""
    form = classify_matrix(g)
    return {
        "tool": "holonomy",
        "version": __version__,
        "input_digest": "sha256:" + hashlib.sha256(source).hexdigest(),
        "graph": {
            "n": g.n,
            "m": g.m,
            "nu": cyclomatic_number(g),
            "matrix_form": form.name,
        },
        "class_report": {
            "class": report.graph_class.short,
            "j_max": report.j_max,
            "stabilization_step": report.stabilization_step,
            "contours": [
                {
                    "vertices": list(c.vertices),
                    "kind": c.kind.value,
                    "has_entry": c.has_entry,
                    "has_exit": c.has_exit,
                }
                for c in report.contours
            ],
            "contours_truncated": report.contours_truncated,
            "critical_intervals": [_interval_json(iv) for iv in report.critical_intervals],
            "outside_scope": report.outside_scope,
        },
        "trajectory": [
            {"step": j, "n": s.n, "m": s.m, "nu": s.nu, "canonical": s.canonical}
            for j, s in enumerate(trajectory.steps if trajectory else ())
        ],
    }


def format_steps(value: float) -> str:
    return "inf" if value == math.inf else str(int(value))

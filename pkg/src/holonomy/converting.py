"""Straight converting (line digraph plus terminal augmentation) and its inverse."""

from __future__ import annotations

import enum
import os
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence, Union

from holonomy.errors import (
    ConvertFailed,
    EmptyGraph,
    HolonomyError,
    InconsistentSeed,
    NoUniqueTerminals,
    NotALineDigraph,
    NotConnected,
    NotQuasicanonical,
    SelfLoop,
    StepBudgetExceeded,
    UnknownVertex,
)
from holonomy.graph import (
    DiGraph,
    FormKind,
    MatrixForm,
    classify_matrix,
    cyclomatic_number,
    has_parallel_edges,
)

DEFAULT_MAX_VERTICES = 1_000_000


def default_budget() -> int:
    """Vertex/step budget, overridable through ``HOLONOMY_BUDGET``."""
    raw = os.environ.get("HOLONOMY_BUDGET")
    return int(raw) if raw else DEFAULT_MAX_VERTICES


class Terminal(enum.Enum):
    NEW_INITIAL = "new_initial"
    NEW_FINAL = "new_final"


# Origin of one output vertex: an input edge ordinal or an added terminal.
Origin = Union[int, Terminal]
ProvenanceMap = tuple[Origin, ...]
TupleLabel = tuple[str, ...]

SENTINEL_PREFIX = "#"


def is_sentinel(token: str) -> bool:
    return token.startswith(SENTINEL_PREFIX)


def initial_label(step: int) -> str:
    return f"#w{step}"


def final_label(step: int) -> str:
    return f"#f{step}"


def line_graph(g: DiGraph) -> tuple[DiGraph, ProvenanceMap]:
    """Directed line graph without augmentation.

    Output vertex ``e<k>`` stands for input edge ``k``; an edge ``e<i> -> e<j>``
    exists when the head of edge ``i`` is the tail of edge ``j``.
    """
    if g.m == 0:
        raise EmptyGraph("line graph of a graph without edges")
    if g.has_self_loop():
        raise SelfLoop("converting is undefined for graphs with self-loops")
    names = tuple(f"e{k}" for k in range(g.m))
    edges = []
    for i, (_, head) in enumerate(g.edges):
        for j in g.out_edges[head]:
            edges.append((names[i], names[j]))
    return DiGraph(names, tuple(edges)), tuple(range(g.m))


def terminal_edges(g: DiGraph) -> tuple[int, int]:
    """Ordinals of the unique initial edge and the unique final edge."""
    sources = [v for v in g.vertices if not g.in_edges[v]]
    sinks = [v for v in g.vertices if not g.out_edges[v]]
    if len(sources) != 1 or len(sinks) != 1:
        raise NoUniqueTerminals(
            f"need exactly one initial and one final vertex, found {len(sources)} and {len(sinks)}"
        )
    (first,) = g.out_edges[sources[0]]
    (last,) = g.in_edges[sinks[0]]
    return first, last


def convert_step(g: DiGraph, step: int = 0) -> tuple[DiGraph, ProvenanceMap]:
    """One straight converting step; ``step`` names the fresh terminals ``#w<step>``/``#f<step>``."""
    if g.has_self_loop():
        raise SelfLoop("converting is undefined for graphs with self-loops")
    if g.m == 0:
        raise EmptyGraph("cannot convert a graph without edges")
    form = classify_matrix(g)
    if form.kind is FormKind.INVALID:
        raise NotQuasicanonical(form.reasons)
    first, last = terminal_edges(g)
    lg, prov = line_graph(g)
    w, f = initial_label(step), final_label(step)
    vertices = (w,) + lg.vertices + (f,)
    edges = ((w, lg.vertices[first]),) + lg.edges + ((lg.vertices[last], f),)
    provenance = (Terminal.NEW_INITIAL,) + prov + (Terminal.NEW_FINAL,)
    return DiGraph(vertices, edges), provenance


@dataclass(frozen=True)
class StepRecord:
    graph: DiGraph
    n: int
    m: int
    nu: int
    provenance: ProvenanceMap | None
    matrix_form: MatrixForm

    @property
    def canonical(self) -> bool:
        return self.matrix_form.kind is FormKind.CANONICAL


def _record(g: DiGraph, provenance: ProvenanceMap | None) -> StepRecord:
    return StepRecord(g, g.n, g.m, cyclomatic_number(g), provenance, classify_matrix(g))


@dataclass(frozen=True)
class ConvertTrajectory:
    steps: tuple[StepRecord, ...]

    def __len__(self) -> int:
        return len(self.steps)

    def __getitem__(self, j: int) -> StepRecord:
        return self.steps[j]

    @property
    def base(self) -> DiGraph:
        return self.steps[0].graph

    @property
    def final(self) -> DiGraph:
        return self.steps[-1].graph

    @property
    def nus(self) -> list[int]:
        return [s.nu for s in self.steps]

    @property
    def ns(self) -> list[int]:
        return [s.n for s in self.steps]

    @property
    def ms(self) -> list[int]:
        return [s.m for s in self.steps]

    @cached_property
    def _labels(self) -> list[dict[str, TupleLabel]]:
        out: list[dict[str, TupleLabel]] = [{v: (v,) for v in self.base.vertices}]
        for j in range(1, len(self.steps)):
            prev_g, prev = self.steps[j - 1].graph, out[-1]
            rec = self.steps[j]
            cur: dict[str, TupleLabel] = {}
            pending = []
            for v, origin in zip(rec.graph.vertices, rec.provenance):
                if isinstance(origin, Terminal):
                    pending.append((v, origin))
                    continue
                t, h = prev_g.edges[origin]
                cur[v] = prev[t] + prev[h][-1:]
            for v, origin in pending:
                if origin is Terminal.NEW_INITIAL:
                    (k,) = rec.graph.out_edges[v]
                    cur[v] = (v,) + cur[rec.graph.edges[k][1]][:-1]
                else:
                    (k,) = rec.graph.in_edges[v]
                    cur[v] = cur[rec.graph.edges[k][0]][1:] + (v,)
            out.append(cur)
        return out

    def labels(self, step: int) -> dict[str, TupleLabel]:
        """Tuple labels of every vertex of the step graph, keyed by vertex."""
        return self._labels[step]


def iterate_convert(g: DiGraph, steps: int, max_vertices: int | None = None) -> ConvertTrajectory:
    """Apply :func:`convert_step` ``steps`` times, recording every intermediate graph.

    Raises StepBudgetExceeded (with the trajectory so far as ``partial``)
    before building a graph with more than ``max_vertices`` vertices.
    """
    budget = default_budget() if max_vertices is None else max_vertices
    records = [_record(g, None)]
    for j in range(steps):
        cur = records[-1].graph
        if cur.m + 2 > budget:
            raise StepBudgetExceeded(
                f"step {j + 1} would have {cur.m + 2} vertices (budget {budget})",
                partial=ConvertTrajectory(tuple(records)),
            )
        try:
            nxt, prov = convert_step(cur, step=j)
            records.append(_record(nxt, prov))
        except (NotQuasicanonical, NoUniqueTerminals, SelfLoop, EmptyGraph, NotConnected) as exc:
            raise ConvertFailed(j, exc) from exc
    return ConvertTrajectory(tuple(records))


def decode_label(traj: ConvertTrajectory, step: int, v: str) -> TupleLabel:
    labels = traj.labels(step)
    if v not in labels:
        raise UnknownVertex(f"{v!r} is not a vertex of step {step}")
    return labels[v]


def reverse_convert(g: DiGraph) -> DiGraph:
    """Rebuild the graph whose line digraph is ``g``.

    Vertices of ``g`` with the same (non-empty) successor set share a head
    node; all vertices without successors share one sink node and all
    vertices without predecessors share one source node. Output edge ``k``
    corresponds to vertex ``k`` of ``g``. The shared terminals also join
    components, so a disconnected ``g`` (the line graph of a connected
    graph can be one) is accepted.
    """
    if g.n == 0:
        raise EmptyGraph("reverse converting needs at least one vertex")
    if g.has_self_loop():
        raise SelfLoop("reverse converting of graphs with self-loops is not supported")
    if has_parallel_edges(g):
        t, h = next(e for e in g.edges if g.edges.count(e) > 1)
        raise NotALineDigraph(f"parallel edges {t} -> {h}", witness=(t, h))

    succ = {v: frozenset(g.successors(v)) for v in g.vertices}
    pred = {v: frozenset(g.predecessors(v)) for v in g.vertices}
    for y in g.vertices:
        ps = g.predecessors(y)
        for x in ps[1:]:
            if succ[x] != succ[ps[0]]:
                raise NotALineDigraph(
                    f"successor sets of {ps[0]} and {x} overlap at {y} but differ",
                    witness=(ps[0], x),
                )
    for y in g.vertices:
        ss = g.successors(y)
        for x in ss[1:]:
            if pred[x] != pred[ss[0]]:
                raise NotALineDigraph(
                    f"predecessor sets of {ss[0]} and {x} overlap at {y} but differ",
                    witness=(ss[0], x),
                )

    # A node is keyed by the successor set it feeds; the sink uses the empty set.
    # The source node is keyed separately so it cannot merge with the sink.
    node_of_tail = {}
    for y in g.vertices:
        node_of_tail[y] = succ[g.predecessors(y)[0]] if pred[y] else "source"
    names: dict[object, str] = {}

    def name(key):
        if key not in names:
            names[key] = f"v{len(names)}"
        return names[key]

    edges = []
    for x in g.vertices:
        tail = name(node_of_tail[x])
        head = name(succ[x] if succ[x] else "sink")
        edges.append((tail, head))
    return DiGraph.from_edges(edges)


def strip_terminals(g: DiGraph) -> DiGraph:
    """Drop a unique pendant source (out-degree 1) and a unique pendant sink (in-degree 1)."""
    sources = [v for v in g.vertices if not g.in_edges[v]]
    sinks = [v for v in g.vertices if not g.out_edges[v]]
    removed = []
    if len(sources) == 1 and len(g.out_edges[sources[0]]) == 1:
        removed.append(sources[0])
    if len(sinks) == 1 and len(g.in_edges[sinks[0]]) == 1:
        removed.append(sinks[0])
    return g.subgraph_without(removed)


def reverse_depth(g: DiGraph, cap: int) -> int:
    """How many times in a row (at most ``cap``) reverse converting succeeds from ``g``."""
    depth = 0
    while depth < cap:
        try:
            g = reverse_convert(g)
        except HolonomyError:
            break
        depth += 1
    return depth


def predict_counts(n0: int, m0: int, nu_sequence: Sequence[int]) -> list[int]:
    """Vertex counts ``[n_0, ..., n_k]`` from the recurrence ``n_{j+1} = n_j + nu_j + 1``."""
    if not nu_sequence:
        raise InconsistentSeed("nu_sequence must hold at least the seed value")
    if nu_sequence[0] != m0 - n0 + 1:
        raise InconsistentSeed(
            f"seed nu {nu_sequence[0]} disagrees with m0 - n0 + 1 = {m0 - n0 + 1}"
        )
    counts = [n0]
    for nu in nu_sequence:
        counts.append(counts[-1] + nu + 1)
    return counts


def edge_isomorphic(h: DiGraph, g: DiGraph) -> bool:
    """True when edge ``k`` of ``h`` maps to edge ``k`` of ``g`` under one vertex bijection."""
    if h.m != g.m or h.n != g.n:
        return False
    fwd: dict[str, str] = {}
    back: dict[str, str] = {}
    for (ht, hh), (gt, gh) in zip(h.edges, g.edges):
        for a, b in ((ht, gt), (hh, gh)):
            if fwd.setdefault(a, b) != b or back.setdefault(b, a) != a:
                return False
    return len(fwd) == h.n

"""Walk profiles, interval taxonomy, contours and the three converting classes."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Sequence

import networkx as nx

from holonomy.converting import convert_step, default_budget
from holonomy.errors import BrokenChain, CircuitBudgetExceeded, NotConnected, StepBudgetExceeded
from holonomy.graph import (
    FAN_IN,
    FAN_OUT,
    DiGraph,
    VertexKind,
    cyclomatic_number,
    kinds,
)

DEFAULT_CIRCUIT_CAP = 10_000


@dataclass(frozen=True)
class Walk:
    """Edge-ordinal sequence; ``start`` pins the vertex of a length-0 walk."""

    edges: tuple[int, ...] = ()
    start: str | None = None

    @classmethod
    def from_vertices(cls, g: DiGraph, vertices: Sequence[str]) -> "Walk":
        """Pick the lowest-ordinal edge for each consecutive vertex pair."""
        if not vertices:
            raise BrokenChain("a walk needs at least one vertex")
        for v in vertices:
            if v not in g.index:
                raise BrokenChain(f"{v!r} is not a vertex")
        edges = []
        for t, h in zip(vertices, vertices[1:]):
            for k in g.out_edges[t]:
                if g.edges[k][1] == h:
                    edges.append(k)
                    break
            else:
                raise BrokenChain(f"no edge {t} -> {h}")
        return cls(tuple(edges), vertices[0])

    def __len__(self) -> int:
        return len(self.edges)

    def vertices(self, g: DiGraph) -> tuple[str, ...]:
        if not self.edges:
            if self.start is None or self.start not in g.index:
                raise BrokenChain("length-0 walk without a valid start vertex")
            return (self.start,)
        for k in self.edges:
            if not 0 <= k < g.m:
                raise BrokenChain(f"edge ordinal {k} out of range")
        seq = [g.edges[self.edges[0]][0]]
        if self.start is not None and self.start != seq[0]:
            raise BrokenChain(f"walk starts at {seq[0]}, not {self.start}")
        for k in self.edges:
            t, h = g.edges[k]
            if t != seq[-1]:
                raise BrokenChain(f"edge {k} starts at {t}, expected {seq[-1]}")
            seq.append(h)
        return tuple(seq)


@dataclass(frozen=True)
class PositionInfo:
    position: int
    vertex: str
    kind: VertexKind
    indeg: int
    outdeg: int


@dataclass(frozen=True)
class WalkProfile:
    positions: tuple[PositionInfo, ...]
    prefix_sums: tuple[int, ...]

    @property
    def kinds(self) -> list[VertexKind]:
        return [p.kind for p in self.positions]


def walk_profile(g: DiGraph, w: Walk) -> WalkProfile:
    """Per-position degree kinds and running sums of ``indeg - outdeg``.

    Repeated visits to a vertex are separate positions.
    """
    ks = kinds(g)
    positions, sums, acc = [], [], 0
    for i, v in enumerate(w.vertices(g)):
        indeg, outdeg = len(g.in_edges[v]), len(g.out_edges[v])
        positions.append(PositionInfo(i, v, ks[v], indeg, outdeg))
        acc += indeg - outdeg
        sums.append(acc)
    return WalkProfile(tuple(positions), tuple(sums))


class IntervalCode(enum.Enum):
    CRITICAL = "critical"
    SAFE = "safe"
    NEUTRAL = "neutral"


def interval_code(start: VertexKind, end: VertexKind) -> IntervalCode:
    if start in FAN_IN and end in FAN_OUT:
        return IntervalCode.CRITICAL
    if start in FAN_OUT and end in FAN_IN:
        return IntervalCode.SAFE
    return IntervalCode.NEUTRAL


@dataclass(frozen=True)
class Interval:
    start_position: int
    end_position: int
    start_kind: VertexKind
    end_kind: VertexKind
    code: IntervalCode
    vertices: tuple[str, ...]
    edges: tuple[int, ...] = ()

    @property
    def length(self) -> int:
        return self.end_position - self.start_position

    @property
    def start(self) -> str:
        return self.vertices[0]

    @property
    def end(self) -> str:
        return self.vertices[-1]


def intervals_of_walk(g: DiGraph, w: Walk) -> list[Interval]:
    verts = w.vertices(g)
    ks = kinds(g)
    marks = [i for i, v in enumerate(verts) if ks[v] is not VertexKind.ELEMENTARY]
    out = []
    for a, b in zip(marks, marks[1:]):
        sk, ek = ks[verts[a]], ks[verts[b]]
        out.append(Interval(a, b, sk, ek, interval_code(sk, ek), verts[a : b + 1], w.edges[a:b]))
    for i in marks:
        if ks[verts[i]] is VertexKind.COMPLICATED:
            c = VertexKind.COMPLICATED
            out.append(Interval(i, i, c, c, IntervalCode.CRITICAL, (verts[i],)))
    out.sort(key=lambda iv: (iv.start_position, iv.length))
    return out


class WalkClass(enum.Enum):
    HOLONOMIC = "holonomic"
    HETERONOMOUS = "heteronomous"


def classify_walk(g: DiGraph, w: Walk) -> WalkClass:
    if any(iv.code is IntervalCode.CRITICAL for iv in intervals_of_walk(g, w)):
        return WalkClass.HETERONOMOUS
    return WalkClass.HOLONOMIC


def graph_intervals(g: DiGraph) -> list[Interval]:
    """Every maximal elementary-interior interval of ``g``, plus a length-0 one per complicated vertex.

    From each out-edge of a non-elementary vertex the chain through
    elementary vertices is followed until the next non-elementary vertex;
    elementary vertices have a single successor so each chain is unique.
    """
    ks = kinds(g)
    found = []
    for u in g.vertices:
        if ks[u] is VertexKind.COMPLICATED:
            c = VertexKind.COMPLICATED
            found.append(Interval(0, 0, c, c, IntervalCode.CRITICAL, (u,)))
        if ks[u] is VertexKind.ELEMENTARY:
            continue
        for k in g.out_edges[u]:
            path, verts = [k], [u, g.edges[k][1]]
            while ks[verts[-1]] is VertexKind.ELEMENTARY and len(path) <= g.n:
                (nk,) = g.out_edges[verts[-1]]
                path.append(nk)
                verts.append(g.edges[nk][1])
            end = verts[-1]
            if ks[end] is VertexKind.ELEMENTARY:
                continue  # unreachable for finite chains; guards a malformed walk
            code = interval_code(ks[u], ks[end])
            found.append(Interval(0, len(path), ks[u], ks[end], code, tuple(verts), tuple(path)))
    found.sort(key=lambda iv: (iv.length, iv.start, iv.end, iv.edges))
    return found


def find_critical_intervals(g: DiGraph) -> list[Interval]:
    """Critical intervals ordered by (length, start label, end label)."""
    return [iv for iv in graph_intervals(g) if iv.code is IntervalCode.CRITICAL]


class ContourKind(enum.Enum):
    LIVE = "live"
    DEADLOCK = "deadlock"
    FICTITIOUS = "fictitious"
    ISOLATED = "isolated"


@dataclass(frozen=True)
class ContourInfo:
    cycle: Walk
    vertices: tuple[str, ...]
    has_entry: bool
    has_exit: bool

    @property
    def kind(self) -> ContourKind:
        if self.has_entry and self.has_exit:
            return ContourKind.LIVE
        if self.has_entry:
            return ContourKind.DEADLOCK
        if self.has_exit:
            return ContourKind.FICTITIOUS
        return ContourKind.ISOLATED


def _simple_digraph(g: DiGraph) -> nx.DiGraph:
    sg = nx.DiGraph()
    sg.add_nodes_from(g.vertices)
    sg.add_edges_from(g.edges)
    return sg


def find_contours(g: DiGraph, cap: int = DEFAULT_CIRCUIT_CAP) -> list[ContourInfo]:
    """One record per elementary cycle, counting parallel edges as distinct cycles.

    Entries and exits are edges outside the cycle's edge set that end on,
    or start from, a cycle vertex. Raises CircuitBudgetExceeded carrying
    the partial result when more than ``cap`` cycles exist.
    """
    idx = g.index
    found: list[ContourInfo] = []
    for nodes in nx.simple_cycles(_simple_digraph(g)):
        rot = min(range(len(nodes)), key=lambda i: idx[nodes[i]])
        nodes = nodes[rot:] + nodes[:rot]
        choices = [[]]
        for t, h in zip(nodes, nodes[1:] + nodes[:1]):
            par = [k for k in g.out_edges[t] if g.edges[k][1] == h]
            choices = [c + [k] for c in choices for k in par]
        for edge_seq in choices:
            in_cycle = set(edge_seq)
            has_entry = any(k not in in_cycle for v in nodes for k in g.in_edges[v])
            has_exit = any(k not in in_cycle for v in nodes for k in g.out_edges[v])
            found.append(
                ContourInfo(Walk(tuple(edge_seq), nodes[0]), tuple(nodes) + (nodes[0],), has_entry, has_exit)
            )
            if len(found) > cap:
                found.sort(key=_contour_key(g))
                raise CircuitBudgetExceeded(f"more than {cap} elementary cycles", partial=found[:cap])
    found.sort(key=_contour_key(g))
    return found


def _contour_key(g: DiGraph):
    idx = g.index
    return lambda c: (len(c.cycle), [idx[v] for v in c.vertices], c.cycle.edges)


def nontrivial_sccs(g: DiGraph) -> list[list[str]]:
    """Strongly connected components that carry at least one cycle, in vertex order."""
    idx = g.index
    out = []
    for comp in nx.strongly_connected_components(_simple_digraph(g)):
        if len(comp) > 1 or any(t == h and t in comp for t, h in g.edges):
            out.append(sorted(comp, key=idx.__getitem__))
    out.sort(key=lambda c: idx[c[0]])
    return out


def live_contour_certificate(g: DiGraph) -> list[str] | None:
    """A strongly connected component that must contain a live contour, or None.

    A component with more internal edges than vertices is not a single
    cycle, so each of its elementary cycles misses some internal edge and
    strong connectivity yields both an entry and an exit. A component that
    is a single cycle is live exactly when external edges enter and leave it.
    """
    for comp in nontrivial_sccs(g):
        members = set(comp)
        internal = sum(1 for t, h in g.edges if t in members and h in members)
        if internal > len(comp):
            return comp
        enters = any(h in members and t not in members for t, h in g.edges)
        leaves = any(t in members and h not in members for t, h in g.edges)
        if enters and leaves:
            return comp
    return None


class GraphClass(enum.Enum):
    H1_HOLONOMIC = "H1"
    H2_BOUNDED_HETERONOMOUS = "H2"
    H3_PROGRESSIVE_HETERONOMOUS = "H3"

    @property
    def short(self) -> str:
        return self.value


@dataclass(frozen=True)
class ClassReport:
    graph_class: GraphClass
    critical_intervals: tuple[Interval, ...]
    live_component: tuple[str, ...] | None
    contours: tuple[ContourInfo, ...]
    contours_truncated: bool
    j_max: int | None
    stabilization_step: int | None
    outside_scope: bool = False
    notes: tuple[str, ...] = field(default=())

    @property
    def live_contours(self) -> list[ContourInfo]:
        return [c for c in self.contours if c.kind is ContourKind.LIVE]


def _require_connected(g: DiGraph) -> None:
    if not g.is_weakly_connected():
        raise NotConnected(f"graph has {len(g.components())} weakly connected components")


def longest_heteronomous_walk(g: DiGraph) -> int | None:
    """Longest walk from a fan-in vertex to a fan-out vertex, or None if none exists.

    Only meaningful without live contours, where such walks cannot revisit
    a vertex; raises ValueError if they can.
    """
    ks = kinds(g)
    starts = [v for v in g.vertices if ks[v] in FAN_IN]
    if not starts:
        return None
    best: dict[str, int | None] = {}
    active: set[str] = set()

    def longest_from(v: str) -> int | None:
        # Longest walk from v to any fan-out vertex (None when unreachable).
        if v in best:
            return best[v]
        if v in active:
            raise ValueError("heteronomous walks pass through a cycle")
        active.add(v)
        res = 0 if ks[v] in FAN_OUT else None
        for w in g.successors(v):
            sub = longest_from(w)
            if sub is not None and (res is None or sub + 1 > res):
                res = sub + 1
        active.discard(v)
        best[v] = res
        return res

    lengths = [x for x in (longest_from(v) for v in starts) if x is not None]
    return max(lengths) if lengths else None


def invariant_steps(g: DiGraph) -> float:
    """Converting steps with the cyclomatic number unchanged; ``math.inf`` when no critical interval exists."""
    _require_connected(g)
    crit = find_critical_intervals(g)
    return min(iv.length for iv in crit) if crit else math.inf


def classify_graph(g: DiGraph, circuit_cap: int = DEFAULT_CIRCUIT_CAP) -> ClassReport:
    _require_connected(g)
    crit = tuple(find_critical_intervals(g))
    live = live_contour_certificate(g)
    try:
        contours, truncated = tuple(find_contours(g, circuit_cap)), False
    except CircuitBudgetExceeded as exc:
        contours, truncated = exc.partial, True
    j_max = min(iv.length for iv in crit) if crit else None
    notes = []
    if live is not None:
        cls = GraphClass.H3_PROGRESSIVE_HETERONOMOUS
        stab = None
    elif crit:
        cls = GraphClass.H2_BOUNDED_HETERONOMOUS
        stab = longest_heteronomous_walk(g) + 1
    else:
        cls = GraphClass.H1_HOLONOMIC
        stab = None
    outside = live is None and bool(nontrivial_sccs(g))
    if outside:
        notes.append("isolated, deadlock or fictitious contours present without a live contour")
    return ClassReport(
        cls, crit, tuple(live) if live else None, contours, truncated, j_max, stab, outside, tuple(notes)
    )


@dataclass(frozen=True)
class Stabilization:
    stabilized: bool
    step: int | None = None
    nu: int | None = None


def stabilization_analysis(g: DiGraph, cap: int, max_vertices: int | None = None) -> Stabilization:
    """First step whose graph has no critical interval (hence no complicated vertex)."""
    _require_connected(g)
    budget = default_budget() if max_vertices is None else max_vertices
    cur = g
    for j in range(cap + 1):
        if not find_critical_intervals(cur):
            return Stabilization(True, j, cyclomatic_number(cur))
        if j == cap:
            break
        if cur.m + 2 > budget:
            raise StepBudgetExceeded(f"step {j + 1} would exceed {budget} vertices")
        cur, _ = convert_step(cur, step=j)
    return Stabilization(False)

"""Walk, contour and Hamiltonian-circuit enumeration.

The depth-first routes are the production path. The converting route
reads walks off the tuple labels of an iterated converting trajectory and
is kept as an independent cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass

from holonomy.converting import default_budget, is_sentinel, iterate_convert, line_graph
from holonomy.errors import ConvertFailed, StepBudgetExceeded
from holonomy.graph import DiGraph

VertexTuple = tuple[str, ...]


@dataclass(frozen=True)
class WalkSet:
    length: int
    walks: tuple[VertexTuple, ...]
    truncated: bool = False

    def __len__(self) -> int:
        return len(self.walks)

    def __iter__(self):
        return iter(self.walks)


class _Budget:
    """Counts emitted walks plus explored partial walks."""

    def __init__(self, limit: int | None):
        self.limit = default_budget() if limit is None else limit
        self.used = 0

    def spend(self) -> bool:
        self.used += 1
        return self.used <= self.limit


def _sorted_successors(g: DiGraph) -> dict[str, list[str]]:
    return {v: sorted(g.successors(v)) for v in g.vertices}


def enumerate_walks_dfs(g: DiGraph, length: int, budget: int | None = None) -> WalkSet:
    """All walks with ``length`` edges as vertex tuples, in lexicographic order."""
    succ = _sorted_successors(g)
    meter = _Budget(budget)
    out: list[VertexTuple] = []
    truncated = False
    stack: list[VertexTuple] = [(v,) for v in sorted(g.vertices, reverse=True)]
    while stack:
        walk = stack.pop()
        if not meter.spend():
            truncated = True
            break
        if len(walk) == length + 1:
            out.append(walk)
            continue
        for w in reversed(succ[walk[-1]]):
            stack.append(walk + (w,))
    return WalkSet(length, tuple(out), truncated)


def _line_graph_labels(g: DiGraph, length: int, budget: int) -> list[VertexTuple] | None:
    """Tuple labels after ``length`` plain line-graph steps; None when over ``budget`` vertices."""
    labels = [(v,) for v in g.vertices]
    cur = g
    for _ in range(length):
        if cur.m > budget:
            return None
        if cur.m == 0:
            return []
        nxt, prov = line_graph(cur)
        labels = [labels[cur.index[cur.edges[k][0]]] + labels[cur.index[cur.edges[k][1]]][-1:] for k in prov]
        cur = nxt
    return labels


def enumerate_walks_via_converting(g: DiGraph, length: int, budget: int | None = None) -> WalkSet:
    """Walks read from the sentinel-free tuple labels after ``length`` converting steps.

    Graphs that cannot be converted (no unique terminals, or not
    quasicanonical) are iterated as plain line graphs, which carry the
    same labels minus the sentinel ones. ``budget`` caps the vertex count
    of any intermediate graph; hitting it yields an empty, truncated set.
    """
    limit = default_budget() if budget is None else budget
    try:
        traj = iterate_convert(g, length, max_vertices=limit)
        labels = list(traj.labels(length).values())
    except StepBudgetExceeded:
        return WalkSet(length, (), True)
    except ConvertFailed:
        labels = _line_graph_labels(g, length, limit)
        if labels is None:
            return WalkSet(length, (), True)
    walks = sorted({lab for lab in labels if not any(is_sentinel(t) for t in lab)})
    return WalkSet(length, tuple(walks), False)


def canonical_rotation(closed: VertexTuple) -> VertexTuple:
    """Least rotation of a closed walk ``(v0, ..., v0)``, returned closed."""
    body = closed[:-1]
    best = min(body[i:] + body[:i] for i in range(len(body)))
    return best + best[:1]


def _closed_walks_from(
    start: str, succ: dict[str, list[str]], length: int, meter: _Budget
) -> tuple[list[VertexTuple], bool]:
    out: list[VertexTuple] = []
    stack: list[VertexTuple] = [(start,)]
    while stack:
        walk = stack.pop()
        if not meter.spend():
            return out, True
        if len(walk) == length + 1:
            if walk[-1] == start:
                out.append(walk)
            continue
        # canonical rotations start at their least label
        for w in reversed(succ[walk[-1]]):
            if w >= start:
                stack.append(walk + (w,))
    return out, False


def enumerate_contours(
    g: DiGraph, max_length: int, budget: int | None = None, route: str = "dfs"
) -> WalkSet:
    """Closed walks of length 1..``max_length``, one per rotation class.

    Each class is reported by its lexicographically least rotation, closed
    (first vertex repeated at the end). Ordered by length, then lexicographically.
    ``route="convert"`` reads closed walks off converting trajectories instead.
    """
    if route == "convert":
        return _contours_via_converting(g, max_length, budget)
    succ = _sorted_successors(g)
    meter = _Budget(budget)
    found: set[VertexTuple] = set()
    truncated = False
    for length in range(1, max_length + 1):
        for start in sorted(g.vertices):
            walks, cut = _closed_walks_from(start, succ, length, meter)
            found.update(w for w in walks if canonical_rotation(w) == w)
            if cut:
                truncated = True
                break
        if truncated:
            break
    return WalkSet(max_length, tuple(sorted(found, key=lambda w: (len(w), w))), truncated)


def _contours_via_converting(g: DiGraph, max_length: int, budget: int | None) -> WalkSet:
    found: set[VertexTuple] = set()
    for length in range(1, max_length + 1):
        ws = enumerate_walks_via_converting(g, length, budget)
        if ws.truncated:
            return WalkSet(max_length, tuple(sorted(found, key=lambda w: (len(w), w))), True)
        found.update(canonical_rotation(w) for w in ws.walks if w[0] == w[-1])
    return WalkSet(max_length, tuple(sorted(found, key=lambda w: (len(w), w))), False)


def hamiltonian_circuits(g: DiGraph, budget: int | None = None, route: str = "dfs") -> WalkSet:
    """Directed cycles through every vertex exactly once, starting at the least label."""
    n = g.n
    if n == 0:
        return WalkSet(0, ())
    if route == "convert":
        closed = _contours_via_converting(g, n, budget)
        full = tuple(w for w in closed.walks if len(w) == n + 1 and len(set(w)) == n)
        return WalkSet(n, full, closed.truncated)
    succ = _sorted_successors(g)
    start = min(g.vertices)
    meter = _Budget(budget)
    out: list[VertexTuple] = []
    stack: list[VertexTuple] = [(start,)]
    while stack:
        path = stack.pop()
        if not meter.spend():
            return WalkSet(n, tuple(out), True)
        if len(path) == n:
            if start in succ[path[-1]]:
                out.append(path + (start,))
            continue
        for w in reversed(succ[path[-1]]):
            if w not in path:
                stack.append(path + (w,))
    return WalkSet(n, tuple(out), False)

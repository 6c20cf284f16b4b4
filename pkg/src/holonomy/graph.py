"""Directed multigraph value type, vertex kinds and operator-matrix forms."""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from holonomy.errors import NotConnected, UnknownVertex

Edge = tuple[str, str]


@dataclass(frozen=True)
class DiGraph:
    """Immutable directed multigraph.

    Vertices are text labels in a fixed order; edges are ``(tail, head)``
    pairs whose position in ``edges`` is their stable ordinal. Parallel
    edges and self-loops are representable.
    """

    vertices: tuple[str, ...] = ()
    edges: tuple[Edge, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple((t, h) for t, h in self.edges))
        if len(set(self.vertices)) != len(self.vertices):
            dup = [v for v, c in Counter(self.vertices).items() if c > 1]
            raise ValueError(f"duplicate vertex labels: {dup}")
        known = set(self.vertices)
        for t, h in self.edges:
            if t not in known or h not in known:
                raise UnknownVertex(f"edge ({t}, {h}) has an endpoint outside the vertex set")

    @classmethod
    def from_edges(cls, edges: Iterable[Edge], vertices: Sequence[str] = ()) -> "DiGraph":
        """Vertices are ``vertices`` followed by new endpoints in first-appearance order."""
        edges = [tuple(e) for e in edges]
        order = dict.fromkeys(vertices)
        for t, h in edges:
            order.setdefault(t)
            order.setdefault(h)
        return cls(tuple(order), tuple(edges))

    @classmethod
    def from_matrix(cls, labels: Sequence[str], matrix: Sequence[Sequence[int]]) -> "DiGraph":
        """Build from a square multiplicity matrix; edges are emitted row-major."""
        n = len(labels)
        if len(matrix) != n or any(len(row) != n for row in matrix):
            raise ValueError("matrix must be square and match the label count")
        edges = []
        for i, row in enumerate(matrix):
            for j, count in enumerate(row):
                if count < 0:
                    raise ValueError("multiplicities must be non-negative")
                edges.extend([(labels[i], labels[j])] * int(count))
        return cls(tuple(labels), tuple(edges))

    def to_matrix(self) -> list[list[int]]:
        idx = self.index
        mat = [[0] * self.n for _ in range(self.n)]
        for t, h in self.edges:
            mat[idx[t]][idx[h]] += 1
        return mat

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def out_edges(self) -> dict[str, tuple[int, ...]]:
        out: dict[str, list[int]] = {v: [] for v in self.vertices}
        for k, (t, _) in enumerate(self.edges):
            out[t].append(k)
        return {v: tuple(ks) for v, ks in out.items()}

    @cached_property
    def in_edges(self) -> dict[str, tuple[int, ...]]:
        inc: dict[str, list[int]] = {v: [] for v in self.vertices}
        for k, (_, h) in enumerate(self.edges):
            inc[h].append(k)
        return {v: tuple(ks) for v, ks in inc.items()}

    def _check(self, v: str) -> None:
        if v not in self.index:
            raise UnknownVertex(f"unknown vertex {v!r}")

    def indeg(self, v: str) -> int:
        self._check(v)
        return len(self.in_edges[v])

    def outdeg(self, v: str) -> int:
        self._check(v)
        return len(self.out_edges[v])

    def successors(self, v: str) -> list[str]:
        """Distinct heads of edges leaving ``v``, in edge order."""
        self._check(v)
        return list(dict.fromkeys(self.edges[k][1] for k in self.out_edges[v]))

    def predecessors(self, v: str) -> list[str]:
        self._check(v)
        return list(dict.fromkeys(self.edges[k][0] for k in self.in_edges[v]))

    def has_self_loop(self) -> bool:
        return any(t == h for t, h in self.edges)

    def components(self) -> list[list[str]]:
        """Weakly connected components, each in vertex order."""
        parent = {v: v for v in self.vertices}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for t, h in self.edges:
            rt, rh = find(t), find(h)
            if rt != rh:
                parent[rh] = rt
        groups: dict[str, list[str]] = {}
        for v in self.vertices:
            groups.setdefault(find(v), []).append(v)
        return list(groups.values())

    def is_weakly_connected(self) -> bool:
        return self.n > 0 and len(self.components()) == 1

    def subgraph_without(self, removed: Iterable[str]) -> "DiGraph":
        gone = set(removed)
        return DiGraph(
            tuple(v for v in self.vertices if v not in gone),
            tuple(e for e in self.edges if e[0] not in gone and e[1] not in gone),
        )

    def relabel(self, mapping: dict[str, str]) -> "DiGraph":
        return DiGraph(
            tuple(mapping.get(v, v) for v in self.vertices),
            tuple((mapping.get(t, t), mapping.get(h, h)) for t, h in self.edges),
        )


@dataclass(frozen=True)
class DegreeSignature:
    indeg: int
    outdeg: int


class VertexKind(enum.Enum):
    INITIAL = "initial"
    FINAL = "final"
    ELEMENTARY = "elementary"
    CONVERGING = "converging"
    DIVERGING = "diverging"
    COMPLICATED = "complicated"


def kind_of(indeg: int, outdeg: int) -> VertexKind:
    if indeg == 0:
        return VertexKind.INITIAL
    if outdeg == 0:
        return VertexKind.FINAL
    if indeg == 1 and outdeg == 1:
        return VertexKind.ELEMENTARY
    if outdeg == 1:
        return VertexKind.CONVERGING
    if indeg == 1:
        return VertexKind.DIVERGING
    return VertexKind.COMPLICATED


def degree_signature(g: DiGraph, v: str) -> DegreeSignature:
    return DegreeSignature(g.indeg(v), g.outdeg(v))


def vertex_kind(g: DiGraph, v: str) -> VertexKind:
    return kind_of(g.indeg(v), g.outdeg(v))


def kinds(g: DiGraph) -> dict[str, VertexKind]:
    return {v: kind_of(len(g.in_edges[v]), len(g.out_edges[v])) for v in g.vertices}


# Fan-in side (may start a critical interval) and fan-out side (may end one).
FAN_IN = frozenset({VertexKind.CONVERGING, VertexKind.COMPLICATED})
FAN_OUT = frozenset({VertexKind.DIVERGING, VertexKind.COMPLICATED})


def cyclomatic_number(g: DiGraph) -> int:
    if not g.is_weakly_connected():
        raise NotConnected(f"graph has {len(g.components())} weakly connected components")
    return g.m - g.n + 1


def is_canonical_graph(g: DiGraph) -> bool:
    return all(k is not VertexKind.COMPLICATED for k in kinds(g).values())


class FormKind(enum.IntEnum):
    INVALID = 0
    QUASICANONICAL = 1
    CANONICAL = 2


@dataclass(frozen=True)
class MatrixForm:
    kind: FormKind
    reasons: tuple[str, ...] = field(default=())

    @property
    def name(self) -> str:
        return self.kind.name.lower()

    def at_least(self, kind: FormKind) -> bool:
        return self.kind >= kind


# Requirement codes reported by classify_matrix.
NONZERO_DIAGONAL = "nonzero-diagonal"
MULTIPLE_EMPTY_COLUMNS = "multiple-empty-columns"
EMPTY_COLUMN_ROW_NOT_SINGLE = "empty-column-row-not-single"
MULTIPLE_EMPTY_ROWS = "multiple-empty-rows"
EMPTY_ROW_COLUMN_NOT_SINGLE = "empty-row-column-not-single"
WIDE_ROW_COLUMN_NOT_SINGLE = "wide-row-column-not-single"
WIDE_COLUMN_ROW_NOT_SINGLE = "wide-column-row-not-single"


def classify_matrix(g: DiGraph) -> MatrixForm:
    """Check the operator matrix of ``g`` against the quasicanonical and canonical rules.

    Row ``h`` of the matrix holds the out-edges of vertex ``h`` and column
    ``g`` its in-edges, so every rule is a statement about degrees. Cells
    with multiplicity k count as k non-zero elements.
    """
    indeg = {v: len(g.in_edges[v]) for v in g.vertices}
    outdeg = {v: len(g.out_edges[v]) for v in g.vertices}
    reasons = []
    if g.has_self_loop():
        reasons.append(NONZERO_DIAGONAL)
    empty_cols = [v for v in g.vertices if indeg[v] == 0]
    empty_rows = [v for v in g.vertices if outdeg[v] == 0]
    if len(empty_cols) > 1:
        reasons.append(MULTIPLE_EMPTY_COLUMNS)
    if any(outdeg[v] != 1 for v in empty_cols):
        reasons.append(EMPTY_COLUMN_ROW_NOT_SINGLE)
    if len(empty_rows) > 1:
        reasons.append(MULTIPLE_EMPTY_ROWS)
    if any(indeg[v] != 1 for v in empty_rows):
        reasons.append(EMPTY_ROW_COLUMN_NOT_SINGLE)
    if reasons:
        return MatrixForm(FormKind.INVALID, tuple(reasons))

    if any(outdeg[v] > 1 and indeg[v] != 1 for v in g.vertices):
        reasons.append(WIDE_ROW_COLUMN_NOT_SINGLE)
    if any(indeg[v] > 1 and outdeg[v] != 1 for v in g.vertices):
        reasons.append(WIDE_COLUMN_ROW_NOT_SINGLE)
    if reasons:
        return MatrixForm(FormKind.QUASICANONICAL, tuple(reasons))
    return MatrixForm(FormKind.CANONICAL)


def has_parallel_edges(g: DiGraph) -> bool:
    return len(set(g.edges)) != len(g.edges)

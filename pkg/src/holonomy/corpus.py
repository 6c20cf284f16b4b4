"""Seeded random graph families used by the test suite and the experiment scripts."""

from __future__ import annotations

import random
from typing import Mapping

from holonomy.graph import DiGraph


def random_process_graph(rng: random.Random, n: int, extra: int | None = None, acyclic: bool = False) -> DiGraph:
    """Connected graph with one initial vertex ``s`` and one final vertex ``t``, each of degree 1.

    A random spine ``s -> ... -> t`` through all inner vertices keeps every
    inner vertex on some s-t walk; ``extra`` chords between inner vertices
    are then added (forward along the spine only when ``acyclic``).
    """
    if n < 3:
        raise ValueError("need at least three vertices")
    inner = [f"v{i}" for i in range(1, n - 1)]
    rng.shuffle(inner)
    spine = ["s"] + inner + ["t"]
    edges = list(zip(spine, spine[1:]))
    present = set(edges)
    if extra is None:
        extra = rng.randint(0, len(inner) + 1)
    pos = {v: i for i, v in enumerate(inner)}
    tries = 0
    while extra and tries < 50 * (extra + 1) and len(inner) > 1:
        tries += 1
        u, w = rng.sample(inner, 2)
        if acyclic and pos[u] > pos[w]:
            u, w = w, u
        if (u, w) in present:
            continue
        edges.append((u, w))
        present.add((u, w))
        extra -= 1
    return DiGraph.from_edges(edges, vertices=["s"] + sorted(inner, key=lambda v: int(v[1:])) + ["t"])


def random_connected_digraph(rng: random.Random, n: int, extra: int) -> DiGraph:
    """Simple, self-loop-free, weakly connected digraph with at most one source and one sink.

    Built on a random Hamiltonian path so only its endpoints can be a
    source or a sink; chords may point anywhere, closing cycles freely.
    """
    order = [f"u{i}" for i in range(n)]
    rng.shuffle(order)
    edges = list(zip(order, order[1:]))
    present = set(edges)
    tries = 0
    while extra and tries < 50 * (extra + 1):
        tries += 1
        u, w = rng.sample(order, 2)
        if (u, w) in present:
            continue
        edges.append((u, w))
        present.add((u, w))
        extra -= 1
    rng.shuffle(edges)
    return DiGraph.from_edges(edges)


def process_corpus(count: int, seed: int, sizes: tuple[int, int] = (4, 10)) -> list[DiGraph]:
    """``count`` process graphs, half of them acyclic, with ``sizes`` vertex bounds."""
    rng = random.Random(seed)
    return [
        random_process_graph(rng, rng.randint(*sizes), acyclic=(i % 2 == 0))
        for i in range(count)
    ]



def subdivide_edges(g: DiGraph, splits: Mapping[int, int]) -> DiGraph:
    """Replace edge ``k`` by a chain through ``splits[k]`` new elementary vertices.

    Cycles and reachability are preserved, so a graph without a live
    contour keeps none, and every interval through a split edge grows.
    """
    vertices = list(g.vertices)
    edges = []
    fresh = 0
    for k, (t, h) in enumerate(g.edges):
        chain = [t]
        for _ in range(splits.get(k, 0)):
            while f"m{fresh}" in g.index:
                fresh += 1
            chain.append(f"m{fresh}")
            vertices.append(f"m{fresh}")
            fresh += 1
        chain.append(h)
        edges.extend(zip(chain, chain[1:]))
    return DiGraph(tuple(vertices), tuple(edges))

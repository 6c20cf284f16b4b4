"""Acceptance criteria, one test each.

The conftest hook prints one PASS/FAIL line per criterion at the end of
the run. ``python3 tests/test_acceptance.py`` runs just this file.
"""

import math
import random
import sys
from functools import lru_cache
from itertools import permutations

import pytest

if __name__ == "__main__":
    # hand over to pytest so the repo-root import path and summary hook apply
    sys.exit(pytest.main([__file__, "-q"]))

from holonomy.classification import (
    GraphClass,
    IntervalCode,
    classify_graph,
    graph_intervals,
    invariant_steps,
    live_contour_certificate,
    stabilization_analysis,
)
from holonomy.converting import (
    Terminal,
    decode_label,
    edge_isomorphic,
    is_sentinel,
    iterate_convert,
    line_graph,
    predict_counts,
    reverse_convert,
    reverse_depth,
)
from holonomy.corpus import process_corpus, random_connected_digraph, random_process_graph, subdivide_edges
from holonomy.enumeration import (
    enumerate_contours,
    enumerate_walks_dfs,
    enumerate_walks_via_converting,
    hamiltonian_circuits,
)
from holonomy.graph import FAN_IN, FAN_OUT, DiGraph, FormKind, VertexKind, classify_matrix, cyclomatic_number, kinds
from tests.conftest import load
from tests.oracles import brute_contours, brute_hamiltonian, brute_walks
from tests.tables import FOURS, TRIPLES, named_step1, named_step2, same_edge_multiset

SEED = 2026
CORPUS_SIZE = 200
HAND_FIXTURES = ("hq1.edges", "live_contour.edges", "holonomic_star.edges")


@lru_cache(maxsize=None)
def corpus():
    return tuple(process_corpus(CORPUS_SIZE, SEED))


@lru_cache(maxsize=None)
def hq1_trajectory():
    return iterate_convert(load("hq1.edges"), 3)


def test_criterion_1_worked_example_reproduction(capsys):
    traj = hq1_trajectory()
    assert traj.nus == [4, 5, 5, 5]
    assert traj.ns == [7, 12, 18, 24]
    assert traj.ms == [10, 16, 22, 28]
    hk2, hk3 = load("hk2.edges"), load("hk3.edges")
    assert (hk2.m, hk3.m) == (16, 22)
    assert (traj[1].m, traj[2].m) == (hk2.m, hk3.m)
    assert (traj[1].n, traj[2].n) == (hk2.n, hk3.n)
    assert same_edge_multiset(named_step1(traj), hk2)
    assert same_edge_multiset(named_step2(traj), hk3)
    # third step from the recurrence alone
    assert traj.ns[3] == traj.ms[2] + 2 == 24
    assert traj.ns[3] + 5 - 1 == traj.ms[3]
    assert predict_counts(traj.ns[0], traj.ms[0], traj.nus)[:4] == traj.ns


def test_criterion_2_canonicality_transition():
    traj = hq1_trajectory()
    assert classify_matrix(traj[0].graph).kind is FormKind.QUASICANONICAL
    assert classify_matrix(traj[1].graph).kind is FormKind.CANONICAL


def test_criterion_3_tuple_label_tables():
    traj = hq1_trajectory()

    def clean(step):
        out = set()
        for v in traj[step].graph.vertices:
            lab = decode_label(traj, step, v)
            if not any(map(is_sentinel, lab)):
                out.add("".join(lab))
        return out

    assert clean(2) == set(TRIPLES) and len(TRIPLES) == 14
    assert clean(3) == set(FOURS) and len(FOURS) == 14
    l_row = [v for v in traj[2].graph.vertices if decode_label(traj, 2, v) == ("C", "D", "E")]
    r1_row = [v for v in traj[3].graph.vertices if decode_label(traj, 3, v) == ("C", "D", "E", "F")]
    assert len(l_row) == 1 and len(r1_row) == 1


def test_criterion_4_growth_law():
    checked = canonical_runs = 0
    for g in corpus():
        assert 4 <= g.n <= 10 and g.is_weakly_connected()
        assert classify_matrix(g).at_least(FormKind.QUASICANONICAL)
        traj = iterate_convert(g, 6)
        ns, ms, nus = traj.ns, traj.ms, traj.nus
        for j in range(6):
            assert ns[j + 1] == ms[j] + 2
        for j in range(1, 6):
            assert ns[j + 1] - ns[j] == (ns[j] - ns[j - 1]) + (nus[j] - nus[j - 1])
        if all(s.canonical for s in traj.steps):
            canonical_runs += 1
            assert len(set(nus)) == 1
            assert len({b - a for a, b in zip(ns, ns[1:])}) == 1
        checked += 1
    assert checked == CORPUS_SIZE
    assert canonical_runs > 0


def _first_increase(nus):
    return next((j for j in range(len(nus) - 1) if nus[j + 1] > nus[j]), None)


def test_criterion_5_classification_consistency():
    graphs = list(corpus()) + [load(name) for name in HAND_FIXTURES]
    seen = {c: 0 for c in GraphClass}
    for g in graphs:
        rep = classify_graph(g)
        seen[rep.graph_class] += 1
        steps = invariant_steps(g)
        if rep.graph_class is GraphClass.H1_HOLONOMIC:
            assert steps == math.inf
            assert len(set(iterate_convert(g, 8).nus)) == 1
        elif rep.graph_class is GraphClass.H2_BOUNDED_HETERONOMOUS:
            k = int(steps)
            nus = iterate_convert(g, k + 1).nus
            assert _first_increase(nus) == k
            stab = stabilization_analysis(g, 8)
            assert stab.stabilized and stab.step == rep.stabilization_step
        else:
            assert live_contour_certificate(g) is not None
            assert any(c.kind.value == "live" for c in rep.contours)
            assert not stabilization_analysis(g, 8).stabilized
            k = int(steps)
            assert k < 8
            nus = iterate_convert(g, 8).nus
            assert nus[8] > nus[k]
    assert all(seen.values())


def test_criterion_6_first_increase_step():
    hq1, live = load("hq1.edges"), load("live_contour.edges")
    assert invariant_steps(hq1) == 0
    assert invariant_steps(live) == 1
    assert _first_increase(iterate_convert(hq1, 2).nus) == 0
    assert _first_increase(iterate_convert(live, 3).nus) == 1


def test_criterion_7_round_trip():
    rng = random.Random(SEED)
    done = 0
    while done < 100:
        n = rng.randint(2, 9)
        g = random_connected_digraph(rng, n, rng.randint(0, 2 * n))
        if g.m < 2:
            continue
        assert not g.has_self_loop() and g.is_weakly_connected()
        lg, _ = line_graph(g)
        assert edge_isomorphic(reverse_convert(lg), g)
        done += 1
    assert reverse_depth(hq1_trajectory().final, 5) >= 3


def test_criterion_8_oracle_equivalence():
    compared = 0
    for g in corpus():
        for length in range(6):
            via = enumerate_walks_via_converting(g, length)
            dfs = enumerate_walks_dfs(g, length)
            if via.truncated or dfs.truncated:
                continue
            assert via.walks == dfs.walks
            compared += 1
    assert compared == 6 * CORPUS_SIZE
    cycle = DiGraph.from_edges([("a", "b"), ("b", "c"), ("c", "a")])
    k3 = DiGraph.from_edges(list(permutations("abc", 2)))
    for g in (cycle, k3):
        for route in ("dfs", "convert"):
            assert list(enumerate_contours(g, 5, route=route).walks) == brute_contours(g, 5)
            assert list(hamiltonian_circuits(g, route=route).walks) == brute_hamiltonian(g)
        for length in range(5):
            assert list(enumerate_walks_dfs(g, length).walks) == brute_walks(g, length)


def _interval_step(g, nxt, prov, tally):
    """Check every tracked interval of ``g`` against its image in ``nxt``."""
    image_of = {origin: v for v, origin in zip(nxt.vertices, prov) if not isinstance(origin, Terminal)}
    found = {(iv.vertices, iv.code) for iv in graph_intervals(nxt)}
    spans = {iv.vertices for iv in graph_intervals(nxt)}
    ks, ks_next = kinds(g), kinds(nxt)
    if VertexKind.COMPLICATED in ks.values():
        assert cyclomatic_number(nxt) > cyclomatic_number(g)
        tally["complicated"] += 1
    for iv in graph_intervals(g):
        if iv.code is IntervalCode.CRITICAL and iv.length > 0:
            image = tuple(image_of[k] for k in iv.edges)
            assert (image, IntervalCode.CRITICAL) in found
            assert len(image) - 1 == iv.length - 1
            if iv.length == 1:
                assert ks_next[image[0]] is VertexKind.COMPLICATED
            tally["critical"] += 1
        elif iv.code is IntervalCode.SAFE:
            if ks[iv.start] is not VertexKind.DIVERGING or ks[iv.end] is not VertexKind.CONVERGING:
                tally["safe_skipped"] += 1
                continue
            (before,) = g.in_edges[iv.start]
            (after,) = g.out_edges[iv.end]
            image = tuple(image_of[k] for k in (before,) + iv.edges + (after,))
            # complicated endpoints satisfy both patterns and are coded critical first
            assert image in spans
            assert ks_next[image[0]] in FAN_OUT and ks_next[image[-1]] in FAN_IN
            assert len(image) - 1 == iv.length + 1
            tally["safe"] += 1


def _h2_instances(count):
    """Random bounded-heteronomous graphs; every other one has its critical intervals stretched."""
    rng = random.Random(SEED + 1)
    out = []
    while len(out) < count:
        g = random_process_graph(rng, rng.randint(5, 10), acyclic=rng.random() < 0.5)
        rep = classify_graph(g)
        if rep.graph_class is not GraphClass.H2_BOUNDED_HETERONOMOUS:
            continue
        if len(out) % 2:
            firsts = {iv.edges[0] for iv in rep.critical_intervals if iv.length > 0}
            if not firsts:
                continue
            g = subdivide_edges(g, {k: rng.randint(1, 3) for k in firsts})
            assert classify_graph(g).graph_class is GraphClass.H2_BOUNDED_HETERONOMOUS
        out.append(g)
    return out


def test_criterion_9_interval_dynamics():
    tally = {"critical": 0, "safe": 0, "safe_skipped": 0, "complicated": 0}
    runs = [hq1_trajectory()]
    for g in _h2_instances(20):
        runs.append(iterate_convert(g, classify_graph(g).stabilization_step + 1))
    longest = 0
    for traj in runs:
        longest = max([longest] + [iv.length for iv in graph_intervals(traj.base) if iv.code is IntervalCode.CRITICAL])
        for j in range(len(traj) - 1):
            _interval_step(traj[j].graph, traj[j + 1].graph, traj[j + 1].provenance, tally)
    assert tally["critical"] > 0 and tally["safe"] > 0 and tally["complicated"] > 0
    assert longest >= 2

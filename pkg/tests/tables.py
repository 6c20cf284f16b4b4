"""Reference data for the seven-vertex worked example and helpers to compare against it."""

from holonomy.converting import ConvertTrajectory
from holonomy.graph import DiGraph

# one-step graph: fixture name of the vertex standing for each original edge
STEP1_NAMES = {
    "AB": "al", "BC": "be", "BD": "ga", "BF": "de", "CD": "et",
    "CE": "th", "DE": "la", "DF": "mu", "EF": "pi", "FG": "rh",
}

# two-step graph: fixture letter of each vertex, keyed by its vertex triple
# ("w" and "f" stand for the first-step initial and final terminals)
STEP2_NAMES = {
    "wAB": "a", "ABC": "b", "ABD": "c", "ABF": "d", "BCD": "e", "BCE": "f",
    "BDE": "g", "BDF": "h", "BFG": "k", "CDE": "l", "CDF": "m", "CEF": "n",
    "DEF": "p", "DFG": "q", "EFG": "r", "FGf": "s",
}

TRIPLES = [
    "ABC", "ABD", "ABF", "BCD", "BCE", "BDE", "BDF",
    "BFG", "CDE", "CDF", "CEF", "DEF", "DFG", "EFG",
]

FOURS = [
    "ABCD", "ABCE", "ABDE", "ABDF", "ABFG", "BCDE", "BCDF",
    "BCEF", "BDEF", "BDFG", "CDEF", "CDFG", "CEFG", "DEFG",
]


def _short(label):
    """'#w0' -> 'w', '#f0' -> 'f'; other tokens unchanged."""
    return "".join(t[1] if t.startswith("#") and t[-1] == "0" else t for t in label)


def named_step1(traj: ConvertTrajectory) -> DiGraph:
    labels = traj.labels(1)
    names = {}
    for v, lab in labels.items():
        if lab == ("#w0", "A"):
            names[v] = "om"
        elif lab == ("G", "#f0"):
            names[v] = "ph"
        else:
            names[v] = STEP1_NAMES["".join(lab)]
    return traj[1].graph.relabel(names)


def named_step2(traj: ConvertTrajectory) -> DiGraph:
    labels = traj.labels(2)
    names = {}
    for v, lab in labels.items():
        if lab[0] == "#w1":
            names[v] = "x"
        elif lab[-1] == "#f1":
            names[v] = "y"
        else:
            names[v] = STEP2_NAMES[_short(lab)]
    return traj[2].graph.relabel(names)


def same_edge_multiset(a: DiGraph, b: DiGraph) -> bool:
    return sorted(a.edges) == sorted(b.edges) and set(a.vertices) == set(b.vertices)

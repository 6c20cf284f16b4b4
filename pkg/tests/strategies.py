import random

from hypothesis import strategies as st

from holonomy.corpus import random_connected_digraph, random_process_graph


@st.composite
def process_graphs(draw, min_n=4, max_n=8, acyclic=None):
    seed = draw(st.integers(0, 2**32 - 1))
    n = draw(st.integers(min_n, max_n))
    flag = draw(st.booleans()) if acyclic is None else acyclic
    extra = draw(st.integers(0, n - 1))
    return random_process_graph(random.Random(seed), n, extra, acyclic=flag)


@st.composite
def connected_digraphs(draw, min_n=2, max_n=8):
    seed = draw(st.integers(0, 2**32 - 1))
    n = draw(st.integers(min_n, max_n))
    extra = draw(st.integers(0 if n > 2 else 1, 2 * n))
    return random_connected_digraph(random.Random(seed), n, extra)


@st.composite
def small_digraphs(draw, max_n=5, allow_loops=False):
    """Arbitrary (possibly disconnected) multigraphs on a few labelled vertices."""
    n = draw(st.integers(1, max_n))
    labels = [f"x{i}" for i in range(n)]
    pairs = st.tuples(st.sampled_from(labels), st.sampled_from(labels))
    if not allow_loops:
        pairs = pairs.filter(lambda e: e[0] != e[1])
    edges = draw(st.lists(pairs, max_size=3 * n)) if n > 1 or allow_loops else []
    from holonomy.graph import DiGraph

    return DiGraph.from_edges(edges, vertices=labels)

"""Iterated directed line-graph converting and cyclomatic-number invariance classes."""

__version__ = "0.1.0"

from holonomy.classification import (  # noqa: E402
    ClassReport,
    ContourInfo,
    ContourKind,
    GraphClass,
    Interval,
    IntervalCode,
    Stabilization,
    Walk,
    WalkClass,
    WalkProfile,
    classify_graph,
    classify_walk,
    find_contours,
    find_critical_intervals,
    graph_intervals,
    intervals_of_walk,
    invariant_steps,
    live_contour_certificate,
    stabilization_analysis,
    walk_profile,
)
from holonomy.converting import (  # noqa: E402
    ConvertTrajectory,
    Terminal,
    convert_step,
    decode_label,
    iterate_convert,
    line_graph,
    predict_counts,
    reverse_convert,
    reverse_depth,
    strip_terminals,
)
from holonomy.enumeration import (  # noqa: E402
    WalkSet,
    enumerate_contours,
    enumerate_walks_dfs,
    enumerate_walks_via_converting,
    hamiltonian_circuits,
)
from holonomy.graph import (  # noqa: E402
    DiGraph,
    FormKind,
    MatrixForm,
    VertexKind,
    classify_matrix,
    cyclomatic_number,
    is_canonical_graph,
    vertex_kind,
)

"""Jaco graphs J_n(1): brush numbers, cleaning simulation, orientation census."""

from .brushes import (
    UNDOABLE,
    BrushReport,
    Undoable,
    brush_number,
    minimal_allocation,
    orientation_cost,
)
from .census import (
    DEFAULT_CAP_EPS,
    KERNEL,
    OrientationCensus,
    brute_force_brush_number,
    census,
    complete_graph_brush_number,
)
from .cleaning import (
    BrushAllocation,
    CleaningStep,
    CleaningTrace,
    allocation_from_json,
    is_cleanable,
    simulate,
    verify_allocation,
)
from .digraph import (
    DiGraph,
    complete_graph,
    digraph_from_json,
    disjoint_union,
    is_acyclic,
    underlying_edges,
)
from .errors import CapExceededError, InternalConsistencyError
from .experiments import (
    HopeBoundRow,
    LinkingRow,
    TableRow,
    hope_bound_experiment,
    linking_edges,
    linking_experiment,
    table1,
    union_additivity_check,
)
from .jaco import (
    HopeView,
    JacoGraph,
    build_jaco,
    finite_degree,
    hope_subgraph,
    jaco_from_json,
    jaconian_set,
    prime_jaconian,
)
from .serial import load_graph_json

__version__ = "0.1.0"

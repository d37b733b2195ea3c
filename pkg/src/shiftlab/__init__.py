"""Exterior, symmetric and combinatorial shifting of graphs."""

from .algebraic import (
    GenericConfig,
    GenericityError,
    exterior_profile,
    exterior_shift,
    symmetric_profile,
    symmetric_shift,
)
from .combinatorial import (
    ShiftKind,
    ShiftStep,
    ShiftTrace,
    apply_shift_sequence,
    canonical_combinatorial_shift,
    chordal_shift_algorithm,
    classify_shift,
    delta_c_is_unique,
    enumerate_combinatorial_shifted_graphs,
    shift_ij,
    shift_ij_closed_form,
    unique_family_graph,
)
from .graph import (
    Graph,
    GraphError,
    MProfile,
    betti_hochster,
    betti_sequence,
    complete_bipartite,
    complete_graph,
    graph_from_json,
    graph_from_profile,
    is_chordal,
    is_k_connected,
    is_shifted,
    m_profile,
    new_graph,
)
from .oracles import betti_shifted_formula, kab_exterior_profile, kab_symmetric_profile

__version__ = "0.1.0"

__all__ = [n for n, v in list(globals().items()) if not n.startswith("_") and not hasattr(v, "__path__") and getattr(v, "__module__", "").startswith("shiftlab")]

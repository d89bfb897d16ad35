"""Core value types for swapdeck.

This package holds the graph value type and the isomorphism oracle that
every other module is built on. It must never import from the feature
modules (deck, recon, swap, families) to avoid circular dependencies.
"""

from .graph import (
    MAX_ORDER,
    Edge,
    EdgeSet,
    Graph,
    StructuralReport,
    add_edges,
    complement,
    edge_set,
    is_connected,
    remove_edges,
    replace_edges,
    structural_report,
    two_coloring,
)
from .iso import (
    CanonicalCode,
    Labeling,
    VertexMap,
    are_isomorphic,
    automorphism_mapping_edge,
    canonical_cache_stats,
    canonical_form,
    canonical_labeling,
    clear_canonical_cache,
    edge_orbits,
)

__all__ = [
    "MAX_ORDER",
    "Edge",
    "EdgeSet",
    "Graph",
    "StructuralReport",
    "add_edges",
    "complement",
    "edge_set",
    "is_connected",
    "remove_edges",
    "replace_edges",
    "structural_report",
    "two_coloring",
    "CanonicalCode",
    "Labeling",
    "VertexMap",
    "are_isomorphic",
    "automorphism_mapping_edge",
    "canonical_cache_stats",
    "canonical_form",
    "canonical_labeling",
    "clear_canonical_cache",
    "edge_orbits",
]

"""Hyperbolic Sombor index toolkit (C++ core)."""

from ._core import (
    Graph,
    HsoError,
    __version__,
    are_isomorphic,
    build,
    canonical_graph6,
    check,
    closed_form_hso,
    edge_term,
    edge_terms,
    enumerate,
    extremal_table,
    hso,
    monotonicity_witnesses,
    parse_graph6,
    so,
    star_max_sweep,
    to_graph6,
    verify_campaign,
)

__all__ = [
    "Graph",
    "HsoError",
    "__version__",
    "are_isomorphic",
    "build",
    "canonical_graph6",
    "check",
    "closed_form_hso",
    "edge_term",
    "edge_terms",
    "enumerate",
    "extremal_table",
    "hso",
    "monotonicity_witnesses",
    "parse_graph6",
    "so",
    "star_max_sweep",
    "to_graph6",
    "verify_campaign",
]

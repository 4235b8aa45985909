"""Toolkit for doubly saturated Ramsey-good graphs: constructions, exact
verification, CNF encoding, SAT-backed search, and landscape analysis."""

from .canon import CanonicalLabeling, canonical_form, isomorphic
from .cliques import clique_number, has_clique, independence_number, max_clique
from .constructions import (
    CirculantSpec,
    PaleyScanRow,
    circulant,
    construct_r3t,
    construct_r4t,
    paley,
    paley_scan,
)
from .graphs import Graph, degree_profile, parse_graph6, write_graph6
from .saturation import (
    SaturationReport,
    Verdict,
    ds_lower_bound,
    is_doubly_saturated,
    is_good,
)

__version__ = "0.1.0"

__all__ = [
    "CanonicalLabeling",
    "CirculantSpec",
    "Graph",
    "PaleyScanRow",
    "SaturationReport",
    "Verdict",
    "canonical_form",
    "circulant",
    "clique_number",
    "construct_r3t",
    "construct_r4t",
    "degree_profile",
    "ds_lower_bound",
    "has_clique",
    "independence_number",
    "is_doubly_saturated",
    "is_good",
    "isomorphic",
    "max_clique",
    "paley",
    "paley_scan",
    "parse_graph6",
    "write_graph6",
]

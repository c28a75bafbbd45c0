"""Graded Betti tables, projective dimension and regularity of edge ideals."""

from .families import (
    PdRegSet,
    bipartite_family,
    complete_bipartite,
    cycle,
    disjoint_edges,
    main_theorem_set,
    path,
    tree_family,
    tree_theorem_set,
    witness,
)
from .graph import Graph, canonical_form, from_edges
from .graph6 import emit_graph6, parse_graph6
from .homology import BettiTable, FieldSpec, hochster_betti, pd_reg, terai_pd_oracle
from .invariants import (
    cochordal_cover_number,
    induced_matching_number,
    invariant_report,
    matching_number,
    tau_max,
)

__version__ = "0.1.0"

__all__ = [
    "BettiTable",
    "FieldSpec",
    "Graph",
    "PdRegSet",
    "bipartite_family",
    "canonical_form",
    "cochordal_cover_number",
    "complete_bipartite",
    "cycle",
    "disjoint_edges",
    "emit_graph6",
    "from_edges",
    "hochster_betti",
    "induced_matching_number",
    "invariant_report",
    "main_theorem_set",
    "matching_number",
    "parse_graph6",
    "path",
    "pd_reg",
    "tau_max",
    "terai_pd_oracle",
    "tree_family",
    "tree_theorem_set",
    "witness",
]

"""Edge ideals of graphs: exact Betti tables, regularity, suspensions and verifiers."""

from .graphs import (
    Graph,
    anticycle,
    complement,
    complete,
    cycle,
    induced_matching_number,
    induced_subgraph,
    is_chordal,
    is_gap_free,
    matching_number,
    path,
    s_suspension,
)
from .graph6 import graph_from_graph6, graph_to_graph6
from .linalg import GF2, RATIONALS, Field
from .monomials import (
    Monomial,
    MonomialIdeal,
    colon,
    edge_ideal,
    ideal_power,
    ideal_product,
    ideal_sum,
    intersect,
    minimalize,
    parse_monomial,
)
from .resolutions import (
    DEFAULT_CAPS,
    BettiTable,
    EngineCaps,
    betti_table,
    has_linear_resolution,
    lcm_lattice,
    linear_quotients_order,
    projective_dimension,
    regularity,
    taylor_betti_oracle,
)
from .verification import ScanConfig, VerificationReport, scan_conjecture

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "anticycle",
    "complement",
    "complete",
    "cycle",
    "induced_matching_number",
    "induced_subgraph",
    "is_chordal",
    "is_gap_free",
    "matching_number",
    "path",
    "s_suspension",
    "graph_from_graph6",
    "graph_to_graph6",
    "GF2",
    "RATIONALS",
    "Field",
    "Monomial",
    "MonomialIdeal",
    "colon",
    "edge_ideal",
    "ideal_power",
    "ideal_product",
    "ideal_sum",
    "intersect",
    "minimalize",
    "parse_monomial",
    "DEFAULT_CAPS",
    "BettiTable",
    "EngineCaps",
    "betti_table",
    "has_linear_resolution",
    "lcm_lattice",
    "linear_quotients_order",
    "projective_dimension",
    "regularity",
    "taylor_betti_oracle",
    "ScanConfig",
    "VerificationReport",
    "scan_conjecture",
]

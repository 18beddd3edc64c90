"""Construction, classification and verification of Neumaier graphs."""

from .cliques import (
    FourPartPartition,
    InvariantViolation,
    NeumaierClassification,
    RegularCliqueReport,
    Verdict,
    classify,
    equitable_partition,
    find_regular_cliques,
    maximal_cliques,
    nexus_of,
    srg_iff_constancy,
)
from .graph import (
    EdgeRegularParams,
    Graph,
    SrgParams,
    build_graph,
    complement,
    diameter,
    edge_regularity,
    from_graph6,
    is_strongly_regular,
    to_graph6,
)
from .parameters import NeumaierParams, SrgNeumaierParams, enumerate_feasible, enumerate_srg_feasible
from .spectrum import CharPoly, SpectrumReport, char_poly, integer_spectrum

__all__ = [
    "CharPoly",
    "EdgeRegularParams",
    "FourPartPartition",
    "Graph",
    "InvariantViolation",
    "NeumaierClassification",
    "NeumaierParams",
    "RegularCliqueReport",
    "SpectrumReport",
    "SrgNeumaierParams",
    "SrgParams",
    "Verdict",
    "build_graph",
    "char_poly",
    "classify",
    "complement",
    "diameter",
    "edge_regularity",
    "enumerate_feasible",
    "enumerate_srg_feasible",
    "equitable_partition",
    "find_regular_cliques",
    "from_graph6",
    "integer_spectrum",
    "is_strongly_regular",
    "maximal_cliques",
    "nexus_of",
    "srg_iff_constancy",
    "to_graph6",
]

__version__ = "0.1.0"

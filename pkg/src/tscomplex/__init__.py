"""Total simplicial complexes of finite simple graphs.

Build the complex of a labeled graph, compute exact simplicial homology
over the rationals or a prime field, decide Cohen-Macaulay / Buchsbaum /
CM_t properties, and enumerate minimal vertex covers and facet-ideal
decompositions.
"""

from .cohen_macaulay import (
    CmReport,
    CmWitness,
    is_cm,
    is_cm_t,
    tsc_cm_shortcut,
    vertex_links_connected,
)
from .complexes import (
    Face,
    SimplicialComplex,
    complex_dumps,
    complex_from_json_dict,
    complex_loads,
    complex_to_json_dict,
)
from .covers import (
    CoverReport,
    PrimeComponent,
    facet_ideal_decomposition,
    friendship_cover_count,
    is_unmixed,
    minimal_vertex_covers,
    stanley_reisner_generators,
)
from .graphs import (
    Graph,
    TotalGraph,
    TotalLabeling,
    default_labeling,
    gen_c42,
    gen_friendship,
    graph_dumps,
    graph_from_edge_list,
    graph_from_json_dict,
    graph_loads,
    graph_to_json_dict,
    is_connected,
    total_graph,
)
from .homology import (
    DEFAULT_FIELD,
    BoundaryMatrix,
    FieldSpec,
    HomologySummary,
    PrimeField,
    Rationals,
    boundary_matrix,
    euler_characteristic,
    export_triplets,
    homology_summary,
    matrix_rank,
    parse_field,
    rank_over,
)
from .tsc import (
    TotalIndexSet,
    build_tsc,
    c42_fixture,
    friendship_facets_closed_form,
    total_indices,
)

__version__ = "0.1.0"

__all__ = [
    "BoundaryMatrix",
    "CmReport",
    "CmWitness",
    "CoverReport",
    "DEFAULT_FIELD",
    "Face",
    "FieldSpec",
    "Graph",
    "HomologySummary",
    "PrimeComponent",
    "PrimeField",
    "Rationals",
    "SimplicialComplex",
    "TotalGraph",
    "TotalIndexSet",
    "TotalLabeling",
    "build_tsc",
    "boundary_matrix",
    "c42_fixture",
    "complex_dumps",
    "complex_from_json_dict",
    "complex_loads",
    "complex_to_json_dict",
    "default_labeling",
    "euler_characteristic",
    "export_triplets",
    "facet_ideal_decomposition",
    "friendship_cover_count",
    "friendship_facets_closed_form",
    "gen_c42",
    "gen_friendship",
    "graph_dumps",
    "graph_from_edge_list",
    "graph_from_json_dict",
    "graph_loads",
    "graph_to_json_dict",
    "homology_summary",
    "is_cm",
    "is_cm_t",
    "is_connected",
    "is_unmixed",
    "matrix_rank",
    "minimal_vertex_covers",
    "parse_field",
    "rank_over",
    "stanley_reisner_generators",
    "total_graph",
    "total_indices",
    "tsc_cm_shortcut",
    "vertex_links_connected",
]

"""Canonical matching-theory decomposition of undirected graphs."""

from .decomposition import (
    Attachment,
    BasilicaDecomposition,
    BasilicaPoset,
    FactorComponent,
    KotzigLovaszClass,
    attachments,
    basilica_order,
    decompose,
    factor_components,
    hasse,
    kotzig_lovasz,
)
from .graph import (
    ContractionResult,
    Graph,
    build_graph,
    connected_components,
    contract,
    delete_vertices,
    induced_subgraph,
)
from .matching import (
    GallaiEdmondsFamily,
    Matching,
    MatchingNotMaximumError,
    allowed_edges_at,
    deficiency,
    gallai_edmonds,
    matching_from_pairs,
    maximum_matching,
    root_component,
    saturated_reach,
)

__all__ = [
    "Attachment",
    "BasilicaDecomposition",
    "BasilicaPoset",
    "ContractionResult",
    "FactorComponent",
    "GallaiEdmondsFamily",
    "Graph",
    "KotzigLovaszClass",
    "Matching",
    "MatchingNotMaximumError",
    "allowed_edges_at",
    "attachments",
    "basilica_order",
    "build_graph",
    "connected_components",
    "contract",
    "decompose",
    "deficiency",
    "delete_vertices",
    "factor_components",
    "gallai_edmonds",
    "hasse",
    "induced_subgraph",
    "kotzig_lovasz",
    "matching_from_pairs",
    "maximum_matching",
    "root_component",
    "saturated_reach",
]

"""Mekler groups of graphs and the graph-to-group pipeline."""

from .centralizer import CentralizerReport, brute_force_centralizer, char_support_centralizer, character_support
from .fingerprint import GroupFingerprint, commutation_matrices, fingerprint, graph_fingerprint, rank_mod_p
from .graphs import (
    GraphDocument,
    SimpleGraph,
    atlas_graphs,
    complete_graph,
    copies_graph,
    copy_permutation,
    cycle_graph,
    disjoint_union,
    empty_graph,
    from_networkx,
    labeled_graphs,
    load_graph,
    parse_graph_document,
    path_graph,
    relabel,
    star_graph,
    to_networkx,
)
from .group import (
    DEFAULT_PRIME,
    MeklerElement,
    MeklerGroup,
    as_fin_group,
    chi,
    mekler_group,
    mekler_inv,
    mekler_inv_batch,
    mekler_mul,
    mekler_mul_batch,
    mekler_order,
    random_elements,
)
from .iso import (
    FingerprintCollision,
    GroupIsomorphism,
    IsoReport,
    exact_iso,
    exact_iso_witness,
    fingerprint_collisions,
    graph_iso,
    induced_group_iso,
    is_graph_isomorphism,
    mekler_iso_report,
)
from .niceness import LITERAL, STRICT, NicePredicate, NicenessReport, is_nice, nice_catalog
from .semidirect import copies_semidirect, semidirect_with

__all__ = [
    "SimpleGraph",
    "GraphDocument",
    "MeklerGroup",
    "MeklerElement",
    "GroupFingerprint",
    "GroupIsomorphism",
    "IsoReport",
    "FingerprintCollision",
    "NicePredicate",
    "NicenessReport",
    "CentralizerReport",
    "DEFAULT_PRIME",
    "LITERAL",
    "STRICT",
    "empty_graph",
    "complete_graph",
    "path_graph",
    "cycle_graph",
    "star_graph",
    "relabel",
    "disjoint_union",
    "copies_graph",
    "copy_permutation",
    "labeled_graphs",
    "atlas_graphs",
    "to_networkx",
    "from_networkx",
    "parse_graph_document",
    "load_graph",
    "mekler_group",
    "mekler_mul",
    "mekler_inv",
    "mekler_inv_batch",
    "mekler_order",
    "mekler_mul_batch",
    "random_elements",
    "chi",
    "as_fin_group",
    "is_nice",
    "nice_catalog",
    "graph_iso",
    "is_graph_isomorphism",
    "induced_group_iso",
    "exact_iso",
    "exact_iso_witness",
    "mekler_iso_report",
    "fingerprint",
    "graph_fingerprint",
    "rank_mod_p",
    "commutation_matrices",
    "fingerprint_collisions",
    "semidirect_with",
    "copies_semidirect",
    "char_support_centralizer",
    "brute_force_centralizer",
    "character_support",
]

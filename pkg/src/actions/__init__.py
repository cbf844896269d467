"""Finite measure-preserving group actions."""

from .catalog import action_catalog, catalog_groups, free_actions, subgroup_class_representatives
from .documents import ActionDocument, load_action, parse_action_document, read_json
from .families import MATRIX_A, MATRIX_B, bernoulli_action, torus_action
from .groups import (
    TABLE_GROUPS,
    FinGroup,
    all_subgroups,
    alternating,
    centralizer,
    check_group_laws,
    commutator_subgroup,
    conjugacy_classes,
    cyclic,
    dihedral,
    direct_product,
    from_generators,
    from_permutations,
    from_table,
    group_by_name,
    group_center,
    normal_closure,
    quaternion,
    subgroup_closure,
    symmetric,
)
from .models import ActionReport, FiniteAction, FiniteProbSpace, OrbitSignature
from .operations import (
    action_from_permutation_images,
    action_report,
    coset_action,
    disjoint_union,
    is_free,
    make_action,
    orbit_equivalent,
    orbit_equivalent_bruteforce,
    orbit_signature,
    orbits,
    regular_action,
    trivial_action,
)

__all__ = [
    "FinGroup",
    "FiniteProbSpace",
    "FiniteAction",
    "OrbitSignature",
    "ActionReport",
    "ActionDocument",
    "TABLE_GROUPS",
    "MATRIX_A",
    "MATRIX_B",
    "cyclic",
    "symmetric",
    "alternating",
    "dihedral",
    "quaternion",
    "direct_product",
    "from_table",
    "from_generators",
    "from_permutations",
    "group_by_name",
    "check_group_laws",
    "subgroup_closure",
    "normal_closure",
    "commutator_subgroup",
    "conjugacy_classes",
    "centralizer",
    "group_center",
    "all_subgroups",
    "make_action",
    "action_report",
    "orbits",
    "orbit_signature",
    "is_free",
    "orbit_equivalent",
    "orbit_equivalent_bruteforce",
    "coset_action",
    "regular_action",
    "trivial_action",
    "disjoint_union",
    "action_from_permutation_images",
    "bernoulli_action",
    "torus_action",
    "action_catalog",
    "catalog_groups",
    "free_actions",
    "subgroup_class_representatives",
    "parse_action_document",
    "load_action",
    "read_json",
]

"""
Deterministic catalog of small actions used by the acceptance suites.

Every action is a disjoint union of coset actions G/H (one H per conjugacy class of
subgroups) with rational orbit masses.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from typing import List, Sequence

from ..common.config import LabConfig, default_config
from .groups import TABLE_GROUPS, FinGroup, all_subgroups, group_by_name
from .models import FiniteAction
from .operations import coset_action, disjoint_union, is_free

LOGGER = logging.getLogger(__name__)


def subgroup_class_representatives(group: FinGroup) -> List[frozenset]:
    """One subgroup per conjugacy class, smallest first."""
    seen: set = set()
    representatives = []
    for subgroup in all_subgroups(group):
        if subgroup in seen:
            continue
        for g in group.elements:
            seen.add(frozenset(group.conj(g, h) for h in subgroup))
        representatives.append(subgroup)
    return representatives


def catalog_groups(max_order: int) -> List[FinGroup]:
    groups = [group_by_name(name) for name in TABLE_GROUPS]
    return [group for group in groups if group.order <= max_order]


def action_catalog(
    max_group_order: int = 8,
    max_atoms: int = 12,
    config: LabConfig | None = None,
) -> List[FiniteAction]:
    """Transitive actions, plus two-orbit unions where one part is regular or a fixed point.

    Two-orbit unions get uniform-per-atom masses; the regular+regular union also gets a
    skewed (1/3, 2/3) split.
    """
    config = config or default_config()
    catalog: List[FiniteAction] = []
    for group in catalog_groups(max_group_order):
        transitive = [
            coset_action(group, sorted(subgroup, key=group.index), config)
            for subgroup in subgroup_class_representatives(group)
        ]
        regular = next(action for action in transitive if action.space.size == group.order)
        point = next(action for action in transitive if action.space.size == 1)
        catalog.extend(action for action in transitive if action.space.size <= max_atoms)
        for action in transitive:
            for anchor in (regular, point):
                if action.space.size + anchor.space.size > max_atoms:
                    continue
                if anchor is point and action is regular:
                    continue
                catalog.append(disjoint_union([anchor, action], config=config))
        if 2 * group.order <= max_atoms:
            catalog.append(disjoint_union([regular, regular], [Fraction(1, 3), Fraction(2, 3)], config))
    LOGGER.info("Action catalog: %s actions (|G| <= %s, <= %s atoms).", len(catalog), max_group_order, max_atoms)
    return _dedupe(catalog)


def _dedupe(actions: Sequence[FiniteAction]) -> List[FiniteAction]:
    seen = set()
    unique = []
    for action in actions:
        key = (action.group.name, action.name, action.space.weights)
        if key in seen:
            continue
        seen.add(key)
        unique.append(action)
    return unique


def free_actions(actions: Sequence[FiniteAction]) -> List[FiniteAction]:
    return [action for action in actions if is_free(action)]

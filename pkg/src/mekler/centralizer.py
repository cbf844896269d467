"""
Centralizer of the character support D = {g : χ(g) ≠ 1 for some character χ}.

For a finite group the characters separate exactly the classes of G/[G,G], so
D = G \\ [G,G]. The result is reported as computed; no relation to any claimed
subgroup is asserted.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from ..actions.groups import FinGroup, Label, commutator_subgroup, group_center
from ..common.config import LabConfig, default_config

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class CentralizerReport:
    group: str
    order: int
    support_size: int
    centralizer: Tuple[Label, ...]
    factorwise: bool = False

    def as_dict(self) -> Dict:
        return {
            "group": self.group,
            "order": self.order,
            "supportSize": self.support_size,
            "centralizerOrder": len(self.centralizer),
            "centralizer": [str(g) for g in self.centralizer],
            "factorwise": self.factorwise,
            "note": "finite analog; computed, not compared with any claimed subgroup",
        }


def character_support(group: FinGroup, config: LabConfig | None = None) -> List[Label]:
    config = config or default_config()
    elements = group.ensure_enumerable(config.caps.group_order)
    derived = commutator_subgroup(group)
    return [g for g in elements if g not in derived]


def _is_perfect(group: FinGroup) -> bool:
    return len(commutator_subgroup(group)) == group.order


def _commutes_with_all(group: FinGroup, g: Label, pool: Sequence[Label]) -> bool:
    return all(group.mul(g, d) == group.mul(d, g) for d in pool)


def _single_structural(group: FinGroup, config: LabConfig) -> List[Label]:
    group.ensure_enumerable(config.caps.group_order)
    if _is_perfect(group):
        return list(group.elements)
    # a non-empty complement of a proper subgroup generates the group
    return group_center(group)


def _single_brute_force(group: FinGroup, pool: Sequence[Label], config: LabConfig) -> List[Label]:
    elements = group.ensure_enumerable(config.caps.group_order)
    return [g for g in elements if _commutes_with_all(group, g, pool)]


def _factor_pools(group: FinGroup) -> List[Tuple[FinGroup, bool, bool]]:
    """(factor, factor perfect, some other factor non-perfect) per factor.

    The projection of D to factor i is the whole factor when another factor is
    non-perfect, and the factor's own support otherwise.
    """
    perfect = [_is_perfect(factor) for factor in group.factors]
    return [
        (factor, perfect[i], any(not perfect[j] for j in range(len(perfect)) if j != i))
        for i, factor in enumerate(group.factors)
    ]


def char_support_centralizer(group: FinGroup, config: LabConfig | None = None) -> CentralizerReport:
    """C_G(D); direct products are handled factor by factor as Π C_{G_i}(π_i D)."""
    config = config or default_config()
    if group.factors:
        pools = _factor_pools(group)
        parts: List[List[Label]] = [
            group_center(factor) if other_non_perfect else _single_structural(factor, config)
            for factor, _, other_non_perfect in pools
        ]
        derived = 1
        for factor in group.factors:
            derived *= len(commutator_subgroup(factor))
        support = group.order - derived
        elements = tuple(itertools.product(*parts))
        report = CentralizerReport(group.name, group.order, support, elements, factorwise=True)
    else:
        support = len(character_support(group, config))
        report = CentralizerReport(group.name, group.order, support, tuple(_single_structural(group, config)))
    LOGGER.info(
        "Character-support centralizer of %s: |D| = %s, |C(D)| = %s.", group.name, report.support_size, len(report.centralizer)
    )
    return report


def brute_force_centralizer(group: FinGroup, config: LabConfig | None = None) -> List[Label]:
    """Every g commuting with every element of D, checked pairwise.

    Direct products above the order cap are checked factor by factor against π_i D.
    """
    config = config or default_config()
    if group.factors and group.order > config.caps.group_order:
        parts = []
        for factor, _, other_non_perfect in _factor_pools(group):
            pool = factor.elements if other_non_perfect else character_support(factor, config)
            parts.append(_single_brute_force(factor, pool, config))
        return list(itertools.product(*parts))
    return _single_brute_force(group, character_support(group, config), config)

"""
L(G) for a finite group: the algebra generated by left translations on ℓ²(G).
"""

from __future__ import annotations

import logging

import numpy as np

from ..actions.groups import FinGroup, conjugacy_classes
from ..common.config import LabConfig, default_config
from ..common.errors import check_cap
from ..staralg import analyze, generate_algebra
from ..staralg.models import StarAlgebra
from .models import RegularBlockCheck

LOGGER = logging.getLogger(__name__)


def left_translation(group: FinGroup, g: object) -> np.ndarray:
    """u_g ξ_h = ξ_{gh}."""
    elements = group.elements
    matrix = np.zeros((len(elements), len(elements)), dtype=np.complex128)
    for column, h in enumerate(elements):
        matrix[group.index(group.mul(g, h)), column] = 1.0
    return matrix


def left_regular_algebra(group: FinGroup, config: LabConfig | None = None) -> StarAlgebra:
    """Generated by u_g for the group's generators, with trace vector ξ_e."""
    config = config or default_config()
    check_cap("regular_group", config.caps.regular_group, group.order)
    size = group.order
    vector = np.zeros(size, dtype=np.complex128)
    vector[group.index(group.identity)] = 1.0
    gens = [left_translation(group, g) for g in group.generators]
    algebra = generate_algebra(size, gens, config, trace_vector=vector)
    LOGGER.debug("L(%s): dimension %s.", group.name, algebra.dimension)
    return algebra


def conjugacy_class_count(group: FinGroup) -> int:
    return len(conjugacy_classes(group))


def regular_block_check(group: FinGroup, config: LabConfig | None = None) -> RegularBlockCheck:
    """centerDim = #classes and every block M_n carries weight n²/|G|."""
    config = config or default_config()
    report = analyze(left_regular_algebra(group, config), config)
    check = RegularBlockCheck(
        group=group.name,
        order=group.order,
        class_count=conjugacy_class_count(group),
        center_dim=report.center_dim,
        blocks=tuple((block.size, block.weight) for block in report.sorted_blocks()),
    )
    if not check.passed:
        LOGGER.warning("Regular block law failed for %s: %s", group.name, check.as_dict())
    return check

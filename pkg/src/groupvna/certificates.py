"""
Word-metric balls and the finite certificates built on them.
"""

from __future__ import annotations

import logging
from typing import List

from ..common.config import LabConfig, default_config
from ..common.errors import InputError, check_cap
from .models import FreeSubgroupWitness, ICCCertificate
from .oracles import Element, GroupOracle

LOGGER = logging.getLogger(__name__)


def ball(oracle: GroupOracle, radius: int, config: LabConfig | None = None) -> List[Element]:
    """Products of at most ``radius`` generators or inverses, breadth-first, deduplicated."""
    config = config or default_config()
    if radius < 0:
        raise InputError(f"radius must be non-negative, got {radius}")
    steps = oracle.symmetric_generators()
    identity = oracle.normal_form(oracle.identity)
    seen = {identity}
    ordered: List[Element] = [identity]
    frontier = [identity]
    for _ in range(radius):
        fresh = []
        for element in frontier:
            for step in steps:
                product = oracle.normal_form(oracle.mul(element, step))
                if product in seen:
                    continue
                seen.add(product)
                ordered.append(product)
                fresh.append(product)
        check_cap("ball_size", config.caps.ball_size, len(ordered))
        if not fresh:
            break
        frontier = fresh
    LOGGER.debug("Ball of radius %s in %s has %s element(s).", radius, oracle.name, len(ordered))
    return ordered


def icc_certificate(
    oracle: GroupOracle,
    radius: int,
    conjugator_radius: int,
    threshold: int,
    config: LabConfig | None = None,
) -> ICCCertificate:
    """min over g ∈ Ball(r)\\{e} of #{h g h⁻¹ : h ∈ Ball(R)}."""
    config = config or default_config()
    if radius < 1:
        raise InputError(f"certificate radius r must be at least 1, got {radius}")
    if threshold < 1:
        raise InputError(f"threshold must be positive, got {threshold}")
    identity = oracle.normal_form(oracle.identity)
    targets = [g for g in ball(oracle, radius, config) if g != identity]
    conjugators = ball(oracle, conjugator_radius, config)
    best = None
    witness = ""
    for g in targets:
        count = len({oracle.normal_form(oracle.conj(h, g)) for h in conjugators})
        if best is None or count < best:
            best, witness = count, repr(g)
        if best == 1:
            break
    if best is None:
        # trivial group: every class is a singleton
        best = 1
    certificate = ICCCertificate(
        group=oracle.name,
        radius=radius,
        conjugator_radius=conjugator_radius,
        min_conjugates=best,
        threshold=threshold,
        witness=witness,
        generator_note=oracle.note,
    )
    LOGGER.info(
        "ICC certificate for %s (r=%s, R=%s): minConjugates=%s, pass=%s.",
        oracle.name,
        radius,
        conjugator_radius,
        best,
        certificate.passed,
    )
    return certificate


def reduced_word_count(rank: int, radius: int) -> int:
    """Reduced words of length ≤ radius in F_rank: 1 + Σ 2n(2n−1)^{k−1}."""
    letters = 2 * rank
    return 1 + sum(letters * (letters - 1) ** (k - 1) for k in range(1, radius + 1))


def free_subgroup_witness(oracle: GroupOracle, radius: int, config: LabConfig | None = None) -> FreeSubgroupWitness:
    """Compare Ball(R) with the free-group count for the same number of generators."""
    size = len(ball(oracle, radius, config))
    witness = FreeSubgroupWitness(
        group=oracle.name,
        radius=radius,
        ball_size=size,
        reduced_words=reduced_word_count(len(oracle.generators), radius),
    )
    if not witness.free_up_to_radius:
        LOGGER.info("%s: ball of radius %s has %s elements, a free group would have %s.", oracle.name, radius, size, witness.reduced_words)
    return witness

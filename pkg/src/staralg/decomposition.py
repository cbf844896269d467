"""
Wedderburn data for a StarAlgebra: the blocks M_{n_i} and their trace weights c_i.
"""

from __future__ import annotations

import logging
import math
from typing import List, Sequence, Tuple

import numpy as np

from ..common.config import LabConfig, default_config
from ..common.errors import ConsistencyFailure, FaithfulnessFailure, check_cap
from .center import center, minimal_central_projections
from .linalg import numerical_rank
from .models import AlgebraReport, BlockSummary, StarAlgebra
from .trace import density_matrix

LOGGER = logging.getLogger(__name__)


def _block_size(algebra: StarAlgebra, projection: np.ndarray, tol: float) -> int:
    cut = (algebra.basis @ projection).reshape(algebra.dimension, -1)
    rank = numerical_rank(cut, tol)
    size = math.isqrt(rank)
    if size * size != rank:
        raise ConsistencyFailure(f"central summand has dimension {rank}, which is not a square")
    return size


def analyze(algebra: StarAlgebra, config: LabConfig | None = None) -> AlgebraReport:
    """Center, minimal central projections, block sizes and weights."""
    config = config or default_config()
    key = ("report", config.tol, config.seed)
    cached = algebra._cache.get(key)
    if cached is not None:
        return cached
    central = center(algebra, config)
    projections = minimal_central_projections(algebra, config, center_algebra=central)
    rho = density_matrix(algebra)
    blocks: List[BlockSummary] = []
    for index, projection in enumerate(projections):
        weight = float(np.real(np.sum(rho.T * projection)))
        if weight < config.tol:
            raise FaithfulnessFailure(index, weight, config.tol)
        blocks.append(BlockSummary(size=_block_size(algebra, projection, config.tol), weight=weight))
    total = sum(block.size**2 for block in blocks)
    if total != algebra.dimension:
        raise ConsistencyFailure(f"block sizes give Σn² = {total}, algebra dimension is {algebra.dimension}")
    report = AlgebraReport(
        dimension=algebra.dimension,
        center_dim=central.dimension,
        is_factor=central.dimension == 1,
        blocks=tuple(blocks),
        projections=projections,
    )
    LOGGER.debug("Analyzed algebra: dimension %s, %s block(s).", report.dimension, len(blocks))
    algebra._cache[key] = report
    return report


def spectrum_from_blocks(blocks: Sequence[BlockSummary], limit: int) -> Tuple[float, ...]:
    values = {0.0}
    for block in blocks:
        steps = [block.weight * k / block.size for k in range(block.size + 1)]
        values = {round(v + s, 12) for v in values for s in steps}
        check_cap("spectrum_size", limit, len(values))
    return tuple(sorted(values))


def trace_spectrum(algebra: StarAlgebra, config: LabConfig | None = None) -> Tuple[float, ...]:
    """All traces of projections: {Σ c_i k_i/n_i : 0 ≤ k_i ≤ n_i}."""
    config = config or default_config()
    report = analyze(algebra, config)
    return spectrum_from_blocks(report.blocks, config.caps.spectrum_size)


def algebra_type(report: AlgebraReport) -> str:
    """Type label: every finite-dimensional algebra is a sum of type I factors."""
    return " ⊕ ".join(f"I_{block.size}" for block in report.sorted_blocks())

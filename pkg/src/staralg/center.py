"""
Centers, relative commutants and minimal central projections.

Everything here works inside an algebra's own orthonormal basis: the commutation
conditions become a linear system on coordinates, so the cost depends on the algebra's
dimension rather than on the ambient d².
"""

from __future__ import annotations

import logging
import math
from typing import List, Tuple

import numpy as np

from ..common.config import LabConfig, default_config
from ..common.errors import ConsistencyFailure, MembershipError
from .linalg import null_space
from .models import ComplexMatrix, StarAlgebra

LOGGER = logging.getLogger(__name__)


def relative_commutant(inner: StarAlgebra, outer: StarAlgebra, config: LabConfig | None = None) -> StarAlgebra:
    """Elements of ``outer`` commuting with every generator of ``inner``."""
    config = config or default_config()
    outer_flat = outer.flat_basis
    blocks = []
    for generator in inner.generators:
        _, residual = outer.coordinates(generator)
        if residual >= outer.tol:
            raise MembershipError(residual, outer.tol)
        commutators = outer.basis @ generator - generator @ outer.basis
        coords = commutators.reshape(outer.dimension, -1) @ outer_flat.conj().T
        blocks.append(coords.T)
    if blocks:
        system = np.vstack(blocks)
    else:
        system = np.zeros((0, outer.dimension), dtype=np.complex128)
    kernel = null_space(system, config.tol)
    basis = np.tensordot(kernel.T, outer.basis, axes=1)
    LOGGER.debug("Relative commutant: %s of %s basis elements survive.", basis.shape[0], outer.dimension)
    return StarAlgebra(
        dim=outer.dim,
        basis=basis,
        generators=basis.copy(),
        trace_vector=outer.trace_vector,
        density=outer.density,
        tol=outer.tol,
    )


def center(algebra: StarAlgebra, config: LabConfig | None = None) -> StarAlgebra:
    return relative_commutant(algebra, algebra, config)


def _self_adjoint_frame(algebra: StarAlgebra) -> np.ndarray:
    """Hermitian matrices whose real span is the self-adjoint part of ``algebra``."""
    basis = algebra.basis
    adjoints = np.conj(np.swapaxes(basis, 1, 2))
    return np.concatenate([(basis + adjoints) / 2, (basis - adjoints) / 2j])


def _cluster(eigenvalues: np.ndarray, gap: float) -> List[List[int]]:
    clusters: List[List[int]] = [[0]]
    for index in range(1, eigenvalues.size):
        if eigenvalues[index] - eigenvalues[index - 1] > gap:
            clusters.append([index])
        else:
            clusters[-1].append(index)
    return clusters


def _support_start(projection: ComplexMatrix, tol: float) -> int:
    diagonal = np.abs(np.diag(projection))
    hits = np.nonzero(diagonal > math.sqrt(tol))[0]
    return int(hits[0]) if hits.size else projection.shape[0]


def minimal_central_projections(
    algebra: StarAlgebra,
    config: LabConfig | None = None,
    *,
    center_algebra: StarAlgebra | None = None,
) -> Tuple[ComplexMatrix, ...]:
    """Split a generic self-adjoint central element into its spectral projections.

    Projections come back in canonical order: by the first ambient index in their
    support, ties broken by draw order.
    """
    config = config or default_config()
    cached = algebra._cache.get(("projections", config.tol, config.seed))
    if cached is not None:
        return cached
    central = center_algebra if center_algebra is not None else center(algebra, config)
    target = central.dimension
    identity = np.eye(algebra.dim, dtype=np.complex128)
    if target == 1:
        result: Tuple[ComplexMatrix, ...] = (identity,)
        algebra._cache[("projections", config.tol, config.seed)] = result
        return result

    frame = _self_adjoint_frame(central)
    rng = np.random.default_rng(config.seed)
    for attempt in range(1, config.redraw_attempts + 1):
        coeffs = rng.standard_normal(frame.shape[0])
        element = np.tensordot(coeffs, frame, axes=1)
        element = (element + element.conj().T) / 2
        eigenvalues, vectors = np.linalg.eigh(element)
        scale = max(1.0, float(np.max(np.abs(eigenvalues))))
        clusters = _cluster(eigenvalues, math.sqrt(config.tol) * scale)
        if len(clusters) != target:
            LOGGER.warning(
                "Central element draw %s gave %s eigenvalue clusters, expected %s; redrawing.",
                attempt,
                len(clusters),
                target,
            )
            continue
        projections = []
        for members in clusters:
            columns = vectors[:, members]
            projections.append(columns @ columns.conj().T)
        order = sorted(range(len(projections)), key=lambda i: (_support_start(projections[i], config.tol), i))
        result = tuple(projections[i] for i in order)
        total = sum(result)
        if np.linalg.norm(total - identity) > math.sqrt(config.tol) * algebra.dim:
            raise ConsistencyFailure("central projections do not sum to the identity")
        algebra._cache[("projections", config.tol, config.seed)] = result
        return result
    raise ConsistencyFailure(
        f"no generic central element found after {config.redraw_attempts} draws (center dimension {target})"
    )

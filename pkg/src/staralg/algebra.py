"""
Generation of finite-dimensional *-algebras and their standard constructors.
"""

from __future__ import annotations

import logging
import math
from typing import Iterable, List, Optional, Sequence

import numpy as np

from ..common.config import LabConfig, default_config
from ..common.errors import InputError, check_cap
from ..common.numbers import normalize_weights, weights_sum_to_one
from .center import minimal_central_projections
from .linalg import extend_orthonormal, null_space, orthonormal_rows
from .models import ComplexMatrix, StarAlgebra, adjoint, as_matrix
from .trace import density_matrix

LOGGER = logging.getLogger(__name__)


def _check_dim(d: object) -> int:
    if isinstance(d, bool) or not isinstance(d, (int, np.integer)) or d < 1:
        raise InputError(f"ambient dimension must be a positive integer, got {d!r}")
    return int(d)


def _trace_vector(vector: object, d: int, tol: float) -> np.ndarray:
    array = np.asarray(vector, dtype=np.complex128).reshape(-1)
    if array.size != d:
        raise InputError(f"trace vector must have {d} entries, got {array.size}")
    if abs(np.linalg.norm(array) - 1.0) > math.sqrt(tol):
        raise InputError(f"trace vector must be a unit vector (norm {np.linalg.norm(array):.6g})")
    return array


def _density(matrix: object, d: int, tol: float) -> np.ndarray:
    rho = as_matrix(matrix, d)
    if np.linalg.norm(rho - adjoint(rho)) > tol * max(1.0, np.linalg.norm(rho)):
        raise InputError("density matrix must be self-adjoint")
    if abs(np.trace(rho) - 1.0) > math.sqrt(tol):
        raise InputError(f"density matrix must have trace 1, got {np.trace(rho).real:.6g}")
    if np.min(np.linalg.eigvalsh(rho)) < -math.sqrt(tol):
        raise InputError("density matrix must be positive semidefinite")
    return rho


def _coerce_weights(weights: Iterable[object], count: int, tol: float) -> tuple:
    parsed = normalize_weights(weights)
    if len(parsed) != count:
        raise InputError(f"expected {count} block weights, got {len(parsed)}")
    if any(w <= 0 for w in parsed):
        raise InputError("block weights must be strictly positive")
    if not weights_sum_to_one(parsed, tol):
        raise InputError(f"block weights must sum to 1, got {float(sum(parsed)):.6g}")
    return tuple(float(w) for w in parsed)


def weights_density(projections: Sequence[ComplexMatrix], weights: Sequence[float]) -> ComplexMatrix:
    """ρ = Σ c_i P_i / Tr(P_i), so Tr(ρ x) = Σ c_i · normalized block trace of x."""
    dim = projections[0].shape[0]
    rho = np.zeros((dim, dim), dtype=np.complex128)
    for projection, weight in zip(projections, weights):
        rho += weight * projection / np.trace(projection).real
    return rho


def _attach_weights(algebra: StarAlgebra, weights: Iterable[object], config: LabConfig) -> StarAlgebra:
    projections = minimal_central_projections(algebra, config)
    values = _coerce_weights(weights, len(projections), config.tol)
    return StarAlgebra(
        dim=algebra.dim,
        basis=algebra.basis.copy(),
        generators=algebra.generators.copy(),
        weights=values,
        density=weights_density(projections, values),
        tol=algebra.tol,
    )


def generate_algebra(
    d: int,
    gens: Sequence[object],
    config: LabConfig | None = None,
    *,
    trace_vector: Optional[object] = None,
    density: Optional[object] = None,
    weights: Optional[Iterable[object]] = None,
) -> StarAlgebra:
    """Smallest unital self-adjoint subalgebra of M_d containing ``gens``.

    The span is saturated by right multiplication with the generators and their
    adjoints; only basis elements added in the previous round are multiplied again.
    """
    config = config or default_config()
    d = _check_dim(d)
    matrices: List[ComplexMatrix] = [as_matrix(g, d) for g in gens]
    closed = matrices + [adjoint(m) for m in matrices]
    identity = np.eye(d, dtype=np.complex128)
    seeds = np.array([identity] + closed).reshape(-1, d * d)
    span = orthonormal_rows(seeds, config.tol)
    frontier = span
    rounds = 0
    while frontier.shape[0]:
        before = span.shape[0]
        for generator in closed:
            products = (frontier.reshape(-1, d, d) @ generator).reshape(-1, d * d)
            span = extend_orthonormal(span, products, config.tol)
        frontier = span[before:]
        rounds += 1
    LOGGER.debug("Generated algebra of dimension %s in M_%s after %s round(s).", span.shape[0], d, rounds)

    generators = np.array(closed) if closed else identity[None, :, :]
    algebra = StarAlgebra(
        dim=d,
        basis=span.reshape(-1, d, d),
        generators=generators,
        trace_vector=None if trace_vector is None else _trace_vector(trace_vector, d, config.tol),
        density=None if density is None else _density(density, d, config.tol),
        tol=config.tol,
    )
    if weights is not None:
        if trace_vector is not None or density is not None:
            raise InputError("give at most one of trace_vector, density and weights")
        algebra = _attach_weights(algebra, weights, config)
    return algebra


def commutant(algebra: StarAlgebra, config: LabConfig | None = None) -> StarAlgebra:
    """{m ∈ M_d : m b = b m for every b in the algebra}."""
    config = config or default_config()
    d = algebra.dim
    check_cap("commutant_dim", config.caps.commutant_dim, d)
    identity = np.eye(d, dtype=np.complex128)
    # row-major vec: vec(g X - X g) = (g ⊗ I - I ⊗ gᵀ) vec(X)
    rows = [np.kron(g, identity) - np.kron(identity, g.T) for g in algebra.generators]
    system = np.vstack(rows) if rows else np.zeros((0, d * d), dtype=np.complex128)
    kernel = null_space(system, config.tol)
    basis = kernel.T.reshape(-1, d, d)
    LOGGER.debug("Commutant of a %s-dimensional algebra in M_%s has dimension %s.", algebra.dimension, d, basis.shape[0])
    return StarAlgebra(dim=d, basis=basis, generators=basis.copy(), tol=algebra.tol)


def same_span(first: StarAlgebra, second: StarAlgebra) -> bool:
    if first.dim != second.dim or first.dimension != second.dimension:
        return False
    return all(second.contains(b) for b in first.basis) and all(first.contains(b) for b in second.basis)


def full_matrix_algebra(n: int, config: LabConfig | None = None) -> StarAlgebra:
    """M_n with the normalized trace."""
    config = config or default_config()
    n = _check_dim(n)
    basis = np.zeros((n * n, n, n), dtype=np.complex128)
    for index in range(n * n):
        basis[index].flat[index] = 1.0
    if n == 1:
        generators = np.ones((1, 1, 1), dtype=np.complex128)
    else:
        shift = np.roll(np.eye(n, dtype=np.complex128), 1, axis=0)
        generators = np.array([np.diag(np.arange(1, n + 1)).astype(np.complex128), shift, shift.T])
    return StarAlgebra(dim=n, basis=basis, generators=generators, tol=config.tol)


def diagonal_algebra(n: int, config: LabConfig | None = None) -> StarAlgebra:
    config = config or default_config()
    n = _check_dim(n)
    basis = np.zeros((n, n, n), dtype=np.complex128)
    for index in range(n):
        basis[index, index, index] = 1.0
    generators = np.diag(np.arange(1, n + 1)).astype(np.complex128)[None, :, :]
    return StarAlgebra(dim=n, basis=basis, generators=generators, tol=config.tol)


def direct_sum_algebra(
    sizes: Sequence[int],
    weights: Optional[Iterable[object]] = None,
    config: LabConfig | None = None,
) -> StarAlgebra:
    """M_{n_1} ⊕ … ⊕ M_{n_k}, block-diagonal in M_{Σn_i}, with optional block weights."""
    config = config or default_config()
    if not sizes:
        raise InputError("direct sum needs at least one summand")
    sizes = [_check_dim(n) for n in sizes]
    d = sum(sizes)
    basis = []
    generators = []
    projections = []
    offset = 0
    for n in sizes:
        block = full_matrix_algebra(n, config)
        for element in block.basis:
            embedded = np.zeros((d, d), dtype=np.complex128)
            embedded[offset : offset + n, offset : offset + n] = element
            basis.append(embedded)
        for element in block.generators:
            embedded = np.zeros((d, d), dtype=np.complex128)
            embedded[offset : offset + n, offset : offset + n] = element
            generators.append(embedded)
        projection = np.zeros((d, d), dtype=np.complex128)
        projection[offset : offset + n, offset : offset + n] = np.eye(n)
        projections.append(projection)
        generators.append(projection)
        offset += n
    values = None
    density = None
    if weights is not None:
        values = _coerce_weights(weights, len(sizes), config.tol)
        density = weights_density(projections, values)
    return StarAlgebra(
        dim=d,
        basis=np.array(basis),
        generators=np.array(generators),
        weights=values,
        density=density,
        tol=config.tol,
    )


def tensor(first: StarAlgebra, second: StarAlgebra, config: LabConfig | None = None) -> StarAlgebra:
    """Kronecker product with the product trace."""
    config = config or default_config()
    d = first.dim * second.dim
    basis = np.array([np.kron(a, b) for a in first.basis for b in second.basis])
    eye_a = np.eye(first.dim, dtype=np.complex128)
    eye_b = np.eye(second.dim, dtype=np.complex128)
    generators = np.array(
        [np.kron(g, eye_b) for g in first.generators] + [np.kron(eye_a, h) for h in second.generators]
    )
    trace_vector = None
    density = None
    if first.trace_vector is not None and second.trace_vector is not None:
        trace_vector = np.kron(first.trace_vector, second.trace_vector)
    else:
        density = np.kron(density_matrix(first), density_matrix(second))
    return StarAlgebra(
        dim=d,
        basis=basis,
        generators=generators,
        trace_vector=trace_vector,
        density=density,
        tol=min(first.tol, second.tol),
    )


def closure_residual(algebra: StarAlgebra) -> float:
    """Largest membership residual over the unit, adjoints and pairwise products."""
    worst = algebra.coordinates(np.eye(algebra.dim))[1]
    for x in algebra.basis:
        worst = max(worst, algebra.coordinates(adjoint(x))[1])
        products = algebra.basis @ x
        for product in products:
            worst = max(worst, algebra.coordinates(product)[1])
    return worst


def validate(algebra: StarAlgebra) -> StarAlgebra:
    """Re-check unitality and *-closure; raise InputError on failure."""
    residual = closure_residual(algebra)
    if residual >= algebra.tol:
        raise InputError(f"basis does not span a unital *-algebra (residual {residual:.3e})")
    return algebra


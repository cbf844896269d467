"""
Trace evaluation. Every trace is τ(x) = Tr(ρ x) for a density ρ resolved from the
algebra: trace vector (ρ = v v*), explicit density, or the normalized ambient trace.
Block weights are converted to a density when the algebra is built.
"""

from __future__ import annotations

import math

import numpy as np

from ..common.errors import MembershipError
from .models import ComplexMatrix, StarAlgebra, as_matrix


def density_matrix(algebra: StarAlgebra) -> ComplexMatrix:
    cached = algebra._cache.get("density")
    if cached is not None:
        return cached
    if algebra.trace_vector is not None:
        v = algebra.trace_vector
        rho = np.outer(v, v.conj())
    elif algebra.density is not None:
        rho = np.array(algebra.density)
    else:
        rho = np.eye(algebra.dim, dtype=np.complex128) / algebra.dim
    algebra._cache["density"] = rho
    return rho


def trace(algebra: StarAlgebra, x: object) -> complex:
    matrix = as_matrix(x, algebra.dim)
    _, residual = algebra.coordinates(matrix)
    if residual >= algebra.tol:
        raise MembershipError(residual, algebra.tol)
    if algebra.trace_vector is not None:
        v = algebra.trace_vector
        return complex(np.vdot(v, matrix @ v))
    # Tr(ρx) without forming the product
    return complex(np.sum(density_matrix(algebra).T * matrix))


def tau_norm(algebra: StarAlgebra, x: object) -> float:
    """‖x‖_τ = τ(x*x)^{1/2}."""
    matrix = as_matrix(x, algebra.dim)
    value = trace(algebra, matrix.conj().T @ matrix).real
    return math.sqrt(max(value, 0.0))

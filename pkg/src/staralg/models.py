"""
Dataclasses for the finite-dimensional *-algebra engine.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import numpy as np
from numpy.typing import NDArray

from ..common.errors import InputError

ComplexMatrix = NDArray[np.complex128]


def as_matrix(value: object, dim: int | None = None) -> ComplexMatrix:
    """Coerce ``value`` into a finite square complex matrix (optionally of size ``dim``)."""
    try:
        matrix = np.asarray(value, dtype=np.complex128)
    except (TypeError, ValueError) as exc:
        raise InputError(f"cannot interpret {type(value).__name__} as a complex matrix") from exc
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise InputError(f"matrix must be square, got shape {matrix.shape}")
    if dim is not None and matrix.shape[0] != dim:
        raise InputError(f"matrix must be {dim}x{dim}, got {matrix.shape[0]}x{matrix.shape[1]}")
    if not np.all(np.isfinite(matrix)):
        raise InputError("matrix entries must be finite")
    return matrix


def adjoint(matrix: ComplexMatrix) -> ComplexMatrix:
    return matrix.conj().T


@dataclass(frozen=True)
class StarAlgebra:
    """Unital self-adjoint subalgebra of M_d with a distinguished trace.

    ``basis`` holds k Hilbert–Schmidt-orthonormal d×d matrices; ``generators`` is a
    self-adjoint generating set used by commutant computations. The trace is taken from
    ``trace_vector`` (vector state), ``density`` (τ(x)=Tr(ρx)), ``weights`` (one per
    minimal central projection, in canonical block order) or, when none is set, the
    normalized ambient trace Tr/d.
    """

    dim: int
    basis: NDArray[np.complex128]
    generators: NDArray[np.complex128]
    weights: Optional[Tuple[float, ...]] = None
    trace_vector: Optional[NDArray[np.complex128]] = None
    density: Optional[NDArray[np.complex128]] = None
    tol: float = 1e-9
    _cache: Dict[str, object] = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self) -> None:
        for name in ("basis", "generators", "trace_vector", "density"):
            value = getattr(self, name)
            if value is not None:
                value.setflags(write=False)

    @property
    def dimension(self) -> int:
        return int(self.basis.shape[0])

    @property
    def flat_basis(self) -> NDArray[np.complex128]:
        return self.basis.reshape(self.dimension, self.dim * self.dim)

    def coordinates(self, x: ComplexMatrix) -> Tuple[NDArray[np.complex128], float]:
        """Return (coefficients in the orthonormal basis, relative residual)."""
        matrix = as_matrix(x, self.dim)
        vector = matrix.reshape(-1)
        coeffs = self.flat_basis.conj() @ vector
        residual = vector - coeffs @ self.flat_basis
        scale = max(float(np.linalg.norm(vector)), 1.0)
        return coeffs, float(np.linalg.norm(residual)) / scale

    def contains(self, x: ComplexMatrix) -> bool:
        return self.coordinates(x)[1] < self.tol

    def from_coordinates(self, coeffs: NDArray[np.complex128]) -> ComplexMatrix:
        return np.tensordot(np.asarray(coeffs, dtype=np.complex128), self.basis, axes=1)

    def random_element(self, rng: np.random.Generator) -> ComplexMatrix:
        coeffs = rng.standard_normal(self.dimension) + 1j * rng.standard_normal(self.dimension)
        return self.from_coordinates(coeffs)


@dataclass(frozen=True, slots=True)
class BlockSummary:
    """One central summand M_n with trace weight c."""

    size: int
    weight: float

    def as_dict(self) -> Dict[str, float]:
        return {"size": self.size, "weight": self.weight}


@dataclass(frozen=True)
class AlgebraReport:
    """Wedderburn data: dimension, center, and the weighted blocks (n_i, c_i)."""

    dimension: int
    center_dim: int
    is_factor: bool
    blocks: Tuple[BlockSummary, ...]
    projections: Tuple[ComplexMatrix, ...] = field(default=(), compare=False, repr=False)

    def sorted_blocks(self) -> List[BlockSummary]:
        return sorted(self.blocks, key=lambda b: (b.size, round(b.weight, 12)))

    def as_dict(self) -> Dict:
        return {
            "dimension": self.dimension,
            "centerDim": self.center_dim,
            "isFactor": self.is_factor,
            "blocks": [block.as_dict() for block in self.sorted_blocks()],
        }

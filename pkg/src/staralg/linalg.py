"""
Span bookkeeping shared by generation, commutants and decompositions.
"""

from __future__ import annotations

import numpy as np
import scipy.linalg
from numpy.typing import NDArray

Rows = NDArray[np.complex128]


def extend_orthonormal(span: Rows, candidates: Rows, tol: float) -> Rows:
    """Return ``span`` extended by the parts of ``candidates`` outside it.

    ``span`` rows are orthonormal; the result is orthonormal and spans
    span ∪ candidates up to the relative tolerance ``tol``.
    """
    if candidates.size == 0:
        return span
    width = candidates.shape[1]
    norms = np.linalg.norm(candidates, axis=1)
    scale = np.maximum(norms, 1.0)
    if span.shape[0]:
        residual = candidates - (candidates @ span.conj().T) @ span
    else:
        residual = candidates.copy()
    keep = np.linalg.norm(residual, axis=1) > tol * scale
    if not np.any(keep):
        return span
    basis = span.reshape(-1, width)
    for vector, limit in zip(residual[keep], scale[keep]):
        # twice is enough (Kahan–Parlett)
        for _ in range(2):
            if basis.shape[0]:
                vector = vector - (basis.conj() @ vector) @ basis
        norm = np.linalg.norm(vector)
        if norm > tol * limit:
            basis = np.vstack([basis, vector / norm])
    return basis


def orthonormal_rows(vectors: Rows, tol: float) -> Rows:
    width = vectors.shape[1] if vectors.ndim == 2 else 0
    return extend_orthonormal(np.zeros((0, width), dtype=np.complex128), vectors, tol)


def null_space(matrix: NDArray, tol: float) -> NDArray[np.complex128]:
    """Orthonormal columns spanning {v : ‖matrix v‖ ≈ 0}.

    Singular values at or below tol·max(1, σ_max) count as zero.
    """
    columns = matrix.shape[1]
    if matrix.shape[0] == 0:
        return np.eye(columns, dtype=np.complex128)
    if matrix.shape[0] < columns:
        padding = np.zeros((columns - matrix.shape[0], columns), dtype=matrix.dtype)
        matrix = np.vstack([matrix, padding])
    _, singular, vh = scipy.linalg.svd(matrix, full_matrices=False)
    threshold = tol * max(1.0, float(singular[0])) if singular.size else tol
    rank = int(np.sum(singular > threshold))
    return vh[rank:].conj().T


def numerical_rank(vectors: Rows, tol: float) -> int:
    if vectors.size == 0:
        return 0
    singular = scipy.linalg.svdvals(vectors)
    if singular.size == 0:
        return 0
    return int(np.sum(singular > tol * max(1.0, float(singular[0]))))

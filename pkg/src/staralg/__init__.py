"""Finite-dimensional *-algebra engine."""

from .algebra import (
    closure_residual,
    commutant,
    diagonal_algebra,
    direct_sum_algebra,
    full_matrix_algebra,
    generate_algebra,
    same_span,
    tensor,
    validate,
    weights_density,
)
from .center import center, minimal_central_projections, relative_commutant
from .decomposition import algebra_type, analyze, spectrum_from_blocks, trace_spectrum
from .models import AlgebraReport, BlockSummary, StarAlgebra, adjoint, as_matrix
from .trace import density_matrix, tau_norm, trace

__all__ = [
    "StarAlgebra",
    "AlgebraReport",
    "BlockSummary",
    "adjoint",
    "as_matrix",
    "generate_algebra",
    "commutant",
    "center",
    "relative_commutant",
    "minimal_central_projections",
    "analyze",
    "trace",
    "tau_norm",
    "density_matrix",
    "trace_spectrum",
    "spectrum_from_blocks",
    "algebra_type",
    "tensor",
    "full_matrix_algebra",
    "diagonal_algebra",
    "direct_sum_algebra",
    "weights_density",
    "same_span",
    "closure_residual",
    "validate",
]

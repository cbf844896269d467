"""Dataclasses for the group-measure space construction."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Tuple

import numpy as np

from ..actions.groups import Label
from ..actions.models import FiniteAction, OrbitSignature
from ..staralg.models import AlgebraReport, StarAlgebra


@dataclass(frozen=True)
class CrossedProduct:
    """L^∞(X) ⋊ G represented on ℓ²(G × X).

    Basis vector (g, x) sits at index ``group_index(g)·|X| + x`` and stands for
    δ_x/√μ(x) in the g-th copy, so every U_g is a permutation matrix.
    """

    action: FiniteAction
    algebra: StarAlgebra
    diagonal: StarAlgebra
    unitaries: Dict[Label, np.ndarray] = field(repr=False)
    trace_vector: np.ndarray = field(repr=False)

    @property
    def dim(self) -> int:
        return self.algebra.dim

    @property
    def atom_count(self) -> int:
        return self.action.space.size

    def multiplication_operator(self, f: np.ndarray) -> np.ndarray:
        """M_f: the function f on X, repeated in every group coordinate."""
        values = np.asarray(f, dtype=np.complex128).reshape(-1)
        return np.diag(np.tile(values, self.action.group.order))

    def monomial(self, f: np.ndarray, g: Label) -> np.ndarray:
        """f·u_g."""
        return self.multiplication_operator(f) @ self.unitaries[g]

    def element(self, coefficients: Dict[Label, np.ndarray]) -> np.ndarray:
        """Σ_g f_g u_g."""
        total = np.zeros((self.dim, self.dim), dtype=np.complex128)
        for g, f in coefficients.items():
            total += self.monomial(f, g)
        return total


@dataclass(frozen=True)
class CartanReport:
    is_masa: bool
    normalizer_dense: bool
    cartan_invariant: OrbitSignature

    def as_dict(self) -> Dict:
        return {
            "isMasa": self.is_masa,
            "normalizerDense": self.normalizer_dense,
            "cartanInvariant": self.cartan_invariant.as_list(),
        }


@dataclass(frozen=True)
class FeldmanMooreResult:
    oe: bool
    cartan_equal: bool

    @property
    def consistent(self) -> bool:
        return self.oe == self.cartan_equal

    def as_dict(self) -> Dict[str, bool]:
        return {"oe": self.oe, "cartanEqual": self.cartan_equal, "consistent": self.consistent}


@dataclass(frozen=True)
class RelationCheck:
    """Largest deviations seen by the product, involution and trace checks."""

    product_error: float = 0.0
    involution_error: float = 0.0
    trace_error: float = 0.0
    traciality_error: float = 0.0
    pairs: int = 0

    def worst(self) -> float:
        return max(self.product_error, self.involution_error, self.trace_error, self.traciality_error)


@dataclass(frozen=True)
class CrossedSummary:
    name: str
    group_order: int
    atoms: int
    is_free: bool
    is_ergodic: bool
    report: AlgebraReport
    cartan: CartanReport
    orbits: Tuple[Tuple[int, ...], ...] = ()

    def as_dict(self) -> Dict:
        payload = {
            "action": self.name,
            "groupOrder": self.group_order,
            "atoms": self.atoms,
            "isFree": self.is_free,
            "isErgodic": self.is_ergodic,
        }
        payload.update(self.report.as_dict())
        payload.update(self.cartan.as_dict())
        return payload

    def as_row(self) -> Dict:
        blocks: List[str] = [f"{b.size}:{round(b.weight, 12)}" for b in self.report.sorted_blocks()]
        return {
            "action": self.name,
            "groupOrder": self.group_order,
            "atoms": self.atoms,
            "isFree": self.is_free,
            "isErgodic": self.is_ergodic,
            "dimension": self.report.dimension,
            "centerDim": self.report.center_dim,
            "isFactor": self.report.is_factor,
            "blocks": " ".join(blocks),
            "isMasa": self.cartan.is_masa,
            "normalizerDense": self.cartan.normalizer_dense,
        }

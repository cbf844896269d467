"""
T-set series of ITPFI factors.

For a product state with eigenvalue lists α^(i) the factor's T-set is the set of t where

    Σ_i (1 − |Σ_k (α_k^(i))^(1+it)|)  converges.

Every term lies in [0, 1]. For finitely described specs the terms are eventually
periodic, so the series converges exactly when every term of the repeating block
vanishes; that is the only case where membership is decided.
"""

from __future__ import annotations

import itertools
import logging
import math
from typing import Iterable, List, Sequence

import numpy as np
from tqdm import tqdm

from ..common.config import LabConfig, default_config
from ..common.errors import InputError
from .models import (
    CONSTANT,
    EXPLICIT,
    IN,
    OUT,
    PERIODIC,
    UNDECIDED,
    Eigenvalues,
    ITPFISpec,
    TsetRow,
    TsetTable,
    TsetVerdict,
    eigenvalue_list,
)

LOGGER = logging.getLogger(__name__)


# ============================================================================
# constructors
# ============================================================================


def constant_spec(eigenvalues: Iterable[object], name: str = "") -> ITPFISpec:
    return ITPFISpec(CONSTANT, cycle=(eigenvalue_list(eigenvalues),), name=name)


def periodic_spec(prefix: Sequence[Iterable[object]], cycle: Sequence[Iterable[object]], name: str = "") -> ITPFISpec:
    return ITPFISpec(
        PERIODIC,
        prefix=tuple(eigenvalue_list(a) for a in prefix),
        cycle=tuple(eigenvalue_list(a) for a in cycle),
        name=name,
    )


def explicit_spec(factors: Sequence[Iterable[object]], name: str = "") -> ITPFISpec:
    return ITPFISpec(EXPLICIT, prefix=tuple(eigenvalue_list(a) for a in factors), name=name)


def _check_lambda(lam: float) -> float:
    lam = float(lam)
    if not 0 < lam < 1:
        raise InputError(f"λ must lie in (0, 1), got {lam}")
    return lam


def powers_spec(lam: float) -> ITPFISpec:
    """Powers factor R_λ: every factor is M_2 with state eigenvalues 1/(1+λ), λ/(1+λ)."""
    lam = _check_lambda(lam)
    return constant_spec([1 / (1 + lam), lam / (1 + lam)], name=f"R_{lam:g}")


def powers_density_matrix(lam: float) -> np.ndarray:
    lam = _check_lambda(lam)
    return np.diag([1 / (1 + lam), lam / (1 + lam)])


def lattice_generator(lam: float) -> float:
    """2π/|ln λ|, the spacing of the Powers T-set."""
    return 2 * math.pi / abs(math.log(_check_lambda(lam)))


def powers_lattice_grid(lam: float, m_range: Iterable[int]) -> List[float]:
    step = lattice_generator(lam)
    return [m * step for m in m_range]


# ============================================================================
# terms and membership
# ============================================================================


def _term(alpha: Eigenvalues, t: float) -> float:
    values = np.asarray(alpha, dtype=np.float64)
    modulus = abs(np.sum(values * np.exp(1j * t * np.log(values))))
    return min(1.0, max(0.0, 1.0 - float(modulus)))


def tset_term(spec: ITPFISpec, i: int, t: float) -> float:
    """1 − |Σ_k α_k^(1+it)| for the i-th factor (0-based)."""
    return _term(spec.eigenvalues(i), t)


def tset_membership(
    spec: ITPFISpec,
    t: float,
    zero_tol: float | None = None,
    max_terms: int | None = None,
    config: LabConfig | None = None,
) -> TsetVerdict:
    config = config or default_config()
    zero_tol = config.zero_tol if zero_tol is None else zero_tol
    max_terms = config.max_terms if max_terms is None else max_terms
    if spec.finitely_described:
        # the prefix contributes a finite sum
        largest = max(_term(alpha, t) for alpha in spec.block)
        return TsetVerdict(IN if largest < zero_tol else OUT, largest)
    terms = [_term(alpha, t) for alpha in itertools.islice(spec.prefix, max_terms)]
    if len(spec.prefix) > max_terms:
        LOGGER.debug("Explicit spec %s truncated to %s of %s terms.", spec.name, max_terms, len(spec.prefix))
    partial = math.fsum(terms)
    return TsetVerdict(UNDECIDED, max(terms, default=0.0), partial_sum=partial, terms=len(terms))


def powers_lattice_member(lam: float, t: float, zero_tol: float = 1e-12) -> bool:
    """Closed form for R_λ.

    With φ = t·ln λ the term equals 1 − (1 − α₁α₂|e^{iφ} − 1|²)^{1/2}, which is below
    ``zero_tol`` iff |e^{iφ} − 1| < ((2z − z²)/(α₁α₂))^{1/2}.
    """
    lam = _check_lambda(lam)
    a1, a2 = 1 / (1 + lam), lam / (1 + lam)
    phase = t * math.log(lam)
    distance = abs(complex(math.cos(phase), math.sin(phase)) - 1)
    return distance < math.sqrt((2 * zero_tol - zero_tol**2) / (a1 * a2))


def tset_scan(spec: ITPFISpec, grid: Sequence[float], config: LabConfig | None = None) -> TsetTable:
    config = config or default_config()
    table = TsetTable(spec)
    for t in tqdm(grid, desc=f"T-set {spec.name or spec.kind}", disable=not config.progress):
        table.rows.append(TsetRow(float(t), tset_membership(spec, float(t), config=config)))
    LOGGER.info("Scanned %s grid point(s) of %s: %s in the T-set.", len(grid), spec.name or spec.kind, len(table.members()))
    return table


# ============================================================================
# tensor products
# ============================================================================


def _interleave(first: Sequence[Eigenvalues], second: Sequence[Eigenvalues]) -> List[Eigenvalues]:
    merged: List[Eigenvalues] = []
    for a, b in zip(first, second):
        merged.extend((a, b))
    return merged


def tensor_spec(first: ITPFISpec, second: ITPFISpec) -> ITPFISpec:
    """Interleave the factor sequences: factor 2i from ``first``, 2i+1 from ``second``.

    Two finitely described specs give a periodic spec; otherwise the result is
    explicit, with the unmatched tail of the longer sequence appended.
    """
    name = f"{first.name or first.kind}⊗{second.name or second.kind}"
    if first.finitely_described and second.finitely_described:
        start = max(len(first.prefix), len(second.prefix))
        width = math.lcm(len(first.cycle), len(second.cycle))
        prefix = _interleave([first.eigenvalues(i) for i in range(start)], [second.eigenvalues(i) for i in range(start)])
        cycle = _interleave(
            [first.eigenvalues(i) for i in range(start, start + width)],
            [second.eigenvalues(i) for i in range(start, start + width)],
        )
        return ITPFISpec(PERIODIC, prefix=tuple(prefix), cycle=tuple(cycle), name=name)
    if first.finitely_described:
        count = second.length or 0
        left = [first.eigenvalues(i) for i in range(count)]
        return ITPFISpec(EXPLICIT, prefix=tuple(_interleave(left, second.prefix)), name=name)
    if second.finitely_described:
        count = first.length or 0
        right = [second.eigenvalues(i) for i in range(count)]
        return ITPFISpec(EXPLICIT, prefix=tuple(_interleave(first.prefix, right)), name=name)
    shared = min(len(first.prefix), len(second.prefix))
    merged = _interleave(first.prefix, second.prefix)
    merged.extend(first.prefix[shared:] or second.prefix[shared:])
    return ITPFISpec(EXPLICIT, prefix=tuple(merged), name=name)

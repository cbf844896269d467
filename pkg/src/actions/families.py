"""
The two concrete action families at finite scale: Bernoulli shifts and linear actions
on the discrete torus (ℤ/N)².
"""

from __future__ import annotations

import itertools
import logging
import math
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from ..common.config import LabConfig, default_config
from ..common.errors import InputError, check_cap
from ..common.numbers import Weight
from .groups import FinGroup, from_generators
from .models import FiniteAction, FiniteProbSpace
from .operations import make_action

LOGGER = logging.getLogger(__name__)

Matrix2 = Tuple[Tuple[int, int], Tuple[int, int]]

# the pair of SL(2,ℤ) matrices generating a free group
MATRIX_A: Matrix2 = ((1, 2), (0, 1))
MATRIX_B: Matrix2 = ((1, 0), (2, 1))


def bernoulli_action(group: FinGroup, base: FiniteProbSpace, config: LabConfig | None = None) -> FiniteAction:
    """β(g)(x)(h) = x(g⁻¹h) on base^G with the product measure."""
    config = config or default_config()
    elements = group.ensure_enumerable(config.caps.group_order)
    atom_count = base.size ** len(elements)
    check_cap("bernoulli_atoms", config.caps.bernoulli_atoms, atom_count)
    configurations = list(itertools.product(range(base.size), repeat=len(elements)))
    weights: List[Weight] = []
    for configuration in configurations:
        weight: Weight = Fraction(1) if base.is_exact else 1.0
        for value in configuration:
            weight = weight * base.weights[value]
        weights.append(weight)
    labels = ["".join(str(base.atoms[v]) for v in configuration) for configuration in configurations]
    if len(set(labels)) != len(labels):
        labels = [str(tuple(base.atoms[v] for v in configuration)) for configuration in configurations]
    space = FiniteProbSpace.build(labels, weights, config.tol)
    position = {configuration: i for i, configuration in enumerate(configurations)}
    # source[g][k] = index of g⁻¹·h_k
    sources = {g: [group.index(group.mul(group.inv(g), h)) for h in elements] for g in elements}
    perm: Dict[object, List[str]] = {}
    for g in elements:
        images = []
        for configuration in configurations:
            shifted = tuple(configuration[k] for k in sources[g])
            images.append(labels[position[shifted]])
        perm[g] = images
    LOGGER.info("Bernoulli shift of %s over %s base atoms: %s configurations.", group.name, base.size, atom_count)
    return make_action(group, space, perm, config, name=f"Bernoulli({group.name})")


def _mat_mul(a: Matrix2, b: Matrix2, modulus: int) -> Matrix2:
    return (
        ((a[0][0] * b[0][0] + a[0][1] * b[1][0]) % modulus, (a[0][0] * b[0][1] + a[0][1] * b[1][1]) % modulus),
        ((a[1][0] * b[0][0] + a[1][1] * b[1][0]) % modulus, (a[1][0] * b[0][1] + a[1][1] * b[1][1]) % modulus),
    )


def _reduce(matrix: Sequence[Sequence[int]], modulus: int) -> Matrix2:
    try:
        rows = [[int(entry) for entry in row] for row in matrix]
    except (TypeError, ValueError) as exc:
        raise InputError(f"torus matrices must have integer entries, got {matrix!r}") from exc
    if len(rows) != 2 or any(len(row) != 2 for row in rows):
        raise InputError(f"torus matrices must be 2x2, got {matrix!r}")
    return ((rows[0][0] % modulus, rows[0][1] % modulus), (rows[1][0] % modulus, rows[1][1] % modulus))


def _inverse_mod(matrix: Matrix2, modulus: int) -> Matrix2:
    (a, b), (c, d) = matrix
    det = (a * d - b * c) % modulus
    if math.gcd(det, modulus) != 1:
        raise InputError(f"matrix {matrix} is not invertible mod {modulus}")
    inv_det = pow(det, -1, modulus) if modulus > 1 else 0
    return ((d * inv_det % modulus, -b * inv_det % modulus), (-c * inv_det % modulus, a * inv_det % modulus))


def torus_action(
    modulus: int,
    matrices: Sequence[Sequence[Sequence[int]]],
    config: LabConfig | None = None,
) -> FiniteAction:
    """Matrices mod N acting on characters of (ℤ/N)² by y ↦ (g⁻¹)ᵀ y, uniform weights."""
    config = config or default_config()
    if isinstance(modulus, bool) or not isinstance(modulus, int) or modulus < 1:
        raise InputError(f"torus modulus must be a positive integer, got {modulus!r}")
    reduced = [_reduce(m, modulus) for m in matrices]
    for matrix in reduced:
        _inverse_mod(matrix, modulus)
    identity: Matrix2 = ((1 % modulus, 0), (0, 1 % modulus))
    group = from_generators(
        f"<mats mod {modulus}>",
        reduced,
        lambda a, b: _mat_mul(a, b, modulus),
        identity,
        inverse=lambda a: _inverse_mod(a, modulus),
        limit=config.caps.torus_group,
    )
    atoms = [(i, j) for i in range(modulus) for j in range(modulus)]
    space = FiniteProbSpace.uniform([f"{i},{j}" for i, j in atoms])
    perm = {}
    for g in group.elements:
        (a, b), (c, d) = _inverse_mod(g, modulus)
        # transpose of g⁻¹ applied to y = (y0, y1)
        perm[g] = [f"{(a * y0 + c * y1) % modulus},{(b * y0 + d * y1) % modulus}" for y0, y1 in atoms]
    LOGGER.info("Torus action mod %s: group of order %s on %s characters.", modulus, group.order, len(atoms))
    return make_action(group, space, perm, config, name=f"torus mod {modulus}")

"""
The group-measure space algebra of a finite action, its trace and Cartan diagnostics.
"""

from __future__ import annotations

import logging
import math
from typing import Dict, List

import numpy as np

from ..actions.models import FiniteAction, OrbitSignature
from ..actions.operations import action_report, orbit_equivalent
from ..common.config import LabConfig, default_config
from ..common.errors import ConsistencyFailure, check_cap
from ..common.numbers import Weight
from ..staralg import analyze, generate_algebra, relative_commutant, trace
from ..staralg.linalg import numerical_rank
from ..staralg.models import StarAlgebra
from .models import CartanReport, CrossedProduct, CrossedSummary, FeldmanMooreResult, RelationCheck

LOGGER = logging.getLogger(__name__)


def crossed_product(action: FiniteAction, config: LabConfig | None = None) -> CrossedProduct:
    """u_h sends (g, x) to (hg, h·x); f acts diagonally by f(x)."""
    config = config or default_config()
    group = action.group
    elements = group.elements
    n_atoms = action.space.size
    d = len(elements) * n_atoms
    check_cap("crossed_dim", config.caps.crossed_dim, d)

    unitaries: Dict[object, np.ndarray] = {}
    for h in elements:
        matrix = np.zeros((d, d), dtype=np.complex128)
        for gi, g in enumerate(elements):
            target = group.index(group.mul(h, g)) * n_atoms
            for x in range(n_atoms):
                matrix[target + action.perm[h][x], gi * n_atoms + x] = 1.0
        unitaries[h] = matrix

    masses = np.array([math.sqrt(float(w)) for w in action.space.weights])
    vector = np.zeros(d, dtype=np.complex128)
    e_index = group.index(group.identity)
    vector[e_index * n_atoms : (e_index + 1) * n_atoms] = masses

    indicators = []
    for x in range(n_atoms):
        f = np.zeros(n_atoms)
        f[x] = 1.0
        indicators.append(np.diag(np.tile(f, len(elements))).astype(np.complex128))
    gens = indicators + [unitaries[g] for g in group.generators]
    algebra = generate_algebra(d, gens, config, trace_vector=vector)
    diagonal = StarAlgebra(
        dim=d,
        basis=np.array(indicators) / math.sqrt(len(elements)),
        generators=np.array(indicators),
        trace_vector=vector,
        tol=config.tol,
    )
    LOGGER.debug("Crossed product of %s: dimension %s acting on C^%s.", action.name, algebra.dimension, d)
    return CrossedProduct(action=action, algebra=algebra, diagonal=diagonal, unitaries=unitaries, trace_vector=vector)


def _shift(action: FiniteAction, g: object, f: np.ndarray) -> np.ndarray:
    """σ_g(f)(x) = f(g⁻¹·x)."""
    inverse = action.perm[action.group.inv(g)]
    return np.array([f[inverse[x]] for x in range(action.space.size)], dtype=np.complex128)


def _random_function(rng: np.random.Generator, size: int) -> np.ndarray:
    return rng.standard_normal(size) + 1j * rng.standard_normal(size)


def verify_relations(cp: CrossedProduct, rng: np.random.Generator) -> RelationCheck:
    """(f u_g)(f' u_h) = f σ_g(f') u_{gh} and (f u_g)* = σ_{g⁻¹}(f̄) u_{g⁻¹}, over all pairs (g, h)."""
    group = cp.action.group
    n = cp.atom_count
    product_error = 0.0
    involution_error = 0.0
    pairs = 0
    for g in group.elements:
        f = _random_function(rng, n)
        left = cp.monomial(f, g)
        adjoint = cp.monomial(_shift(cp.action, group.inv(g), f.conj()), group.inv(g))
        involution_error = max(involution_error, float(np.max(np.abs(left.conj().T - adjoint))))
        for h in group.elements:
            f_prime = _random_function(rng, n)
            expected = cp.monomial(f * _shift(cp.action, g, f_prime), group.mul(g, h))
            actual = left @ cp.monomial(f_prime, h)
            product_error = max(product_error, float(np.max(np.abs(actual - expected))))
            pairs += 1
    return RelationCheck(product_error=product_error, involution_error=involution_error, pairs=pairs)


def verify_trace(cp: CrossedProduct, rng: np.random.Generator, samples: int = 100) -> RelationCheck:
    """τ(Σ f_g u_g) = Σ_x f_e(x) μ(x), and |τ(xy) − τ(yx)| on random pairs."""
    group = cp.action.group
    weights = np.array([float(w) for w in cp.action.space.weights])
    trace_error = 0.0
    traciality_error = 0.0
    for _ in range(samples):
        coefficients = {g: _random_function(rng, cp.atom_count) for g in group.elements}
        expected = complex(np.sum(coefficients[group.identity] * weights))
        trace_error = max(trace_error, abs(trace(cp.algebra, cp.element(coefficients)) - expected))
        x = cp.algebra.random_element(rng)
        y = cp.algebra.random_element(rng)
        scale = max(1.0, float(np.linalg.norm(x) * np.linalg.norm(y)))
        traciality_error = max(traciality_error, abs(trace(cp.algebra, x @ y) - trace(cp.algebra, y @ x)) / scale)
    return RelationCheck(trace_error=trace_error, traciality_error=traciality_error, pairs=samples)


def _unimodular_functions(n: int) -> List[np.ndarray]:
    """Characters x ↦ exp(2πi k x / n): unimodular and spanning all functions on X."""
    points = np.arange(n)
    return [np.exp(2j * math.pi * k * points / n) for k in range(n)]


def normalizer_dense(cp: CrossedProduct, config: LabConfig | None = None) -> bool:
    """Whether the monomials f·u_g with |f| ≡ 1 span the whole algebra."""
    config = config or default_config()
    functions = _unimodular_functions(cp.atom_count)
    for f in functions:
        if not cp.algebra.contains(cp.multiplication_operator(f)):
            return False
    for unitary in cp.unitaries.values():
        if not cp.algebra.contains(unitary):
            return False
    # monomials for distinct g have disjoint supports, so ranks add up across g
    per_group_rank = numerical_rank(np.array(functions), config.tol)
    return per_group_rank * len(cp.unitaries) == cp.algebra.dimension


def cartan_invariant(cp: CrossedProduct, config: LabConfig | None = None) -> OrbitSignature:
    """Orbits read off the inclusion: x ~ y when p_x M p_y ≠ 0, weighted by τ(p_x)."""
    config = config or default_config()
    n = cp.atom_count
    d = cp.dim
    basis = cp.algebra.basis
    # support of the algebra in (group, atom) coordinates, folded onto atom pairs
    support = np.max(np.abs(basis), axis=0).reshape(d // n, n, d // n, n)
    linked = np.max(support, axis=(0, 2)) > math.sqrt(config.tol)
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for x in range(n):
        for y in range(n):
            if linked[x, y]:
                parent[find(x)] = find(y)
    masses: List[Weight] = []
    for x in range(n):
        f = np.zeros(n)
        f[x] = 1.0
        mass = trace(cp.algebra, cp.multiplication_operator(f)).real
        if cp.action.space.is_exact:
            # τ(p_x) is the atom weight, kept exact
            exact = cp.action.space.weights[x]
            if abs(mass - float(exact)) > math.sqrt(config.tol):
                raise ConsistencyFailure(f"trace of atom {x} is {mass}, expected {exact}")
            mass = exact
        masses.append(mass)
    components: Dict[int, List[Weight]] = {}
    for x in range(n):
        components.setdefault(find(x), []).append(masses[x])
    return OrbitSignature.from_orbits(list(components.values()))


def cartan_report(cp: CrossedProduct, config: LabConfig | None = None) -> CartanReport:
    config = config or default_config()
    commutant_in_algebra = relative_commutant(cp.diagonal, cp.algebra, config)
    return CartanReport(
        is_masa=commutant_in_algebra.dimension == cp.diagonal.dimension,
        normalizer_dense=normalizer_dense(cp, config),
        cartan_invariant=cartan_invariant(cp, config),
    )


def feldman_moore_check(
    first: FiniteAction,
    second: FiniteAction,
    config: LabConfig | None = None,
) -> FeldmanMooreResult:
    """Orbit equivalence on the action side against equality of the Cartan inclusions."""
    config = config or default_config()
    left = cartan_invariant(crossed_product(first, config), config)
    right = cartan_invariant(crossed_product(second, config), config)
    result = FeldmanMooreResult(oe=orbit_equivalent(first, second), cartan_equal=left == right)
    if not result.consistent:
        LOGGER.warning("Feldman-Moore mismatch between %s and %s: %s", first.name, second.name, result.as_dict())
    return result


def free_block_check(action: FiniteAction, config: LabConfig | None = None) -> bool:
    """For a free action: blocks of the crossed product are orbit sizes with orbit masses."""
    config = config or default_config()
    report = action_report(action)
    if not report.is_free:
        return False
    analysis = analyze(crossed_product(action, config).algebra, config)
    from_blocks = sorted((b.size, round(b.weight, 9)) for b in analysis.blocks)
    from_orbits = sorted(
        (len(orbit), round(float(sum(action.space.weights[i] for i in orbit)), 9)) for orbit in report.orbits
    )
    return from_blocks == from_orbits


def crossed_summary(action: FiniteAction, config: LabConfig | None = None) -> CrossedSummary:
    config = config or default_config()
    cp = crossed_product(action, config)
    report = action_report(action)
    return CrossedSummary(
        name=action.name,
        group_order=action.group.order,
        atoms=action.space.size,
        is_free=report.is_free,
        is_ergodic=report.is_ergodic,
        report=analyze(cp.algebra, config),
        cartan=cartan_report(cp, config),
        orbits=report.orbits,
    )

"""Tests for the finite-dimensional *-algebra engine."""

from fractions import Fraction
from pathlib import Path
import sys

PROJECT_ROOT = Path(__file__).resolve().parents[1]
if str(PROJECT_ROOT) not in sys.path:
    sys.path.insert(0, str(PROJECT_ROOT))

import numpy as np
import pytest
import scipy.linalg

from src.common.config import LabConfig
from src.common.errors import CapExceeded, FaithfulnessFailure, InputError, MembershipError
from src.staralg import (
    algebra_type,
    analyze,
    center,
    closure_residual,
    commutant,
    diagonal_algebra,
    direct_sum_algebra,
    full_matrix_algebra,
    generate_algebra,
    relative_commutant,
    same_span,
    tau_norm,
    tensor,
    trace,
    trace_spectrum,
)

X = np.array([[0, 1], [1, 0]], dtype=complex)
Z = np.array([[1, 0], [0, -1]], dtype=complex)


@pytest.fixture
def config():
    return LabConfig(tol=1e-9, seed=20240611)


@pytest.fixture
def swap_algebra(config):
    """Group algebra of the two-element group with the δ-trace."""
    return generate_algebra(2, [X], config, trace_vector=[1, 0])


def _sizes(report):
    return sorted((block.size, round(block.weight, 9)) for block in report.blocks)


def _random_generators(rng, d):
    """A few block-diagonal elements with random multiplicities, rotated by a random unitary."""
    sizes = []
    remaining = d
    while remaining:
        n = int(rng.integers(1, remaining + 1))
        m = int(rng.integers(1, remaining // n + 1))
        sizes.append((n, m))
        remaining -= n * m
    unitary, _ = np.linalg.qr(rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d)))
    gens = []
    for _ in range(int(rng.integers(1, 3))):
        blocks = [
            np.kron(rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n)), np.eye(m)) for n, m in sizes
        ]
        gens.append(unitary @ scipy.linalg.block_diag(*blocks) @ unitary.conj().T)
    return gens


# ============================================================================
# generate_algebra
# ============================================================================


def test_generate_scalars(config):
    algebra = generate_algebra(2, [], config)
    assert algebra.dimension == 1
    assert algebra.contains(np.eye(2))


def test_generate_diagonal(config):
    algebra = generate_algebra(2, [np.diag([1, 2])], config)
    assert algebra.dimension == 2
    assert algebra.contains(np.diag([5, -1]))
    assert not algebra.contains(X)


def test_generate_full_from_pauli(config):
    algebra = generate_algebra(2, [X, Z], config)
    assert algebra.dimension == 4
    assert closure_residual(algebra) < config.tol


def test_generate_basis_is_orthonormal(config):
    algebra = generate_algebra(3, [np.diag([1, 2, 2]), np.eye(3)[[1, 2, 0]]], config)
    gram = algebra.flat_basis.conj() @ algebra.flat_basis.T
    assert np.allclose(gram, np.eye(algebra.dimension), atol=1e-10)


def test_generate_rejects_mismatched_shapes(config):
    with pytest.raises(InputError):
        generate_algebra(2, [np.eye(3)], config)
    with pytest.raises(InputError):
        generate_algebra(2, [np.ones((2, 3))], config)
    with pytest.raises(InputError):
        generate_algebra(0, [], config)


def test_generate_rejects_non_unit_trace_vector(config):
    with pytest.raises(InputError):
        generate_algebra(2, [X], config, trace_vector=[1, 1])


# ============================================================================
# commutants and centers
# ============================================================================


def test_commutant_examples(config):
    assert commutant(generate_algebra(3, [], config), config).dimension == 9
    assert commutant(full_matrix_algebra(3, config), config).dimension == 1
    diagonal = diagonal_algebra(3, config)
    assert same_span(commutant(diagonal, config), diagonal)


def test_commutant_cap(config):
    small = config.with_caps(commutant_dim=2)
    with pytest.raises(CapExceeded):
        commutant(full_matrix_algebra(3, config), small)


def test_double_commutant_on_random_algebras(config):
    rng = np.random.default_rng(7)
    for trial in range(50):
        d = 2 + trial % 5
        algebra = generate_algebra(d, _random_generators(rng, d), config)
        bicommutant = commutant(commutant(algebra, config), config)
        assert same_span(bicommutant, algebra), f"trial {trial} in M_{d}"


def test_center_of_direct_sum(config):
    algebra = direct_sum_algebra([1, 2], config=config)
    assert center(algebra, config).dimension == 2


def test_relative_commutant_rejects_outside_generators(config):
    with pytest.raises(MembershipError):
        relative_commutant(full_matrix_algebra(2, config), diagonal_algebra(2, config), config)


# ============================================================================
# analyze and traces
# ============================================================================


def test_analyze_full_matrix(config):
    report = analyze(full_matrix_algebra(2, config), config)
    assert report.dimension == 4
    assert report.center_dim == 1
    assert report.is_factor
    assert _sizes(report) == [(2, 1.0)]
    assert algebra_type(report) == "I_2"


def test_analyze_diagonal_uniform(config):
    report = analyze(diagonal_algebra(3, config), config)
    assert report.center_dim == 3
    assert not report.is_factor
    assert _sizes(report) == [(1, round(1 / 3, 9))] * 3
    assert algebra_type(report) == "I_1 ⊕ I_1 ⊕ I_1"


def test_analyze_group_algebra_of_two_element_group(swap_algebra, config):
    report = analyze(swap_algebra, config)
    assert _sizes(report) == [(1, 0.5), (1, 0.5)]
    for projection in report.projections:
        assert np.allclose(projection @ projection, projection, atol=1e-9)
    plus = (np.eye(2) + X) / 2
    assert any(np.allclose(p, plus, atol=1e-9) for p in report.projections)


def test_analyze_report_invariants(config):
    rng = np.random.default_rng(11)
    for d in range(2, 6):
        algebra = generate_algebra(d, _random_generators(rng, d), config)
        report = analyze(algebra, config)
        assert sum(block.size**2 for block in report.blocks) == report.dimension
        assert sum(block.weight for block in report.blocks) == pytest.approx(1.0)
        assert report.is_factor == (report.center_dim == 1) == (len(report.blocks) == 1)


def test_analyze_flags_degenerate_trace(config):
    algebra = generate_algebra(2, [np.diag([1, 2])], config, trace_vector=[1, 0])
    with pytest.raises(FaithfulnessFailure):
        analyze(algebra, config)


def test_loose_tolerance_flags_small_block(config):
    loose = config.with_overrides(tol=1e-1)
    algebra = direct_sum_algebra([1, 1], [Fraction(1, 20), Fraction(19, 20)], config=loose)
    with pytest.raises(FaithfulnessFailure):
        analyze(algebra, loose)


def test_trace_examples(swap_algebra, config):
    assert trace(swap_algebra, np.eye(2)) == pytest.approx(1.0)
    assert trace(swap_algebra, X) == pytest.approx(0.0)
    full = full_matrix_algebra(2, config)
    assert trace(full, np.diag([1, 0])) == pytest.approx(0.5)


def test_trace_rejects_non_member(config):
    with pytest.raises(MembershipError):
        trace(diagonal_algebra(2, config), X)


def test_trace_is_tracial_and_faithful(config):
    algebra = direct_sum_algebra([1, 2], ["1/3", "2/3"], config=config)
    rng = np.random.default_rng(3)
    for _ in range(20):
        x = algebra.random_element(rng)
        y = algebra.random_element(rng)
        assert abs(trace(algebra, x @ y) - trace(algebra, y @ x)) < 1e-9
        assert trace(algebra, x.conj().T @ x).real > -1e-9
        assert tau_norm(algebra, x) > 0


def test_weights_are_matched_to_blocks_in_order(config):
    algebra = generate_algebra(3, [np.diag([1, 1, 2])], config, weights=["1/4", "3/4"])
    report = analyze(algebra, config)
    assert [round(b.weight, 9) for b in report.blocks] == [0.25, 0.75]
    with pytest.raises(InputError):
        generate_algebra(3, [np.diag([1, 1, 2])], config, weights=[0.5, 0.6])


def test_trace_spectrum_examples(config):
    assert trace_spectrum(full_matrix_algebra(2, config), config) == pytest.approx((0.0, 0.5, 1.0))
    weighted = direct_sum_algebra([1, 1], [Fraction(1, 3), Fraction(2, 3)], config=config)
    assert trace_spectrum(weighted, config) == pytest.approx((0.0, 1 / 3, 2 / 3, 1.0))
    assert trace_spectrum(full_matrix_algebra(1, config), config) == pytest.approx((0.0, 1.0))


def test_trace_spectrum_is_symmetric(config):
    algebra = direct_sum_algebra([1, 2, 3], ["1/6", "1/3", "1/2"], config=config)
    values = trace_spectrum(algebra, config)
    assert values[0] == pytest.approx(0.0) and values[-1] == pytest.approx(1.0)
    for value in values:
        assert 0.0 <= value <= 1.0
        assert min(abs(other - (1 - value)) for other in values) < 1e-9


# ============================================================================
# tensor
# ============================================================================


def test_tensor_of_full_algebras(config):
    report = analyze(tensor(full_matrix_algebra(2, config), full_matrix_algebra(3, config), config), config)
    assert _sizes(report) == [(6, 1.0)]


def test_tensor_of_weighted_sum_with_m2(config):
    weighted = direct_sum_algebra([1, 1], ["1/4", "3/4"], config=config)
    report = analyze(tensor(weighted, full_matrix_algebra(2, config), config), config)
    assert _sizes(report) == [(2, 0.25), (2, 0.75)]


def test_tensor_with_m1_is_identity(swap_algebra, config):
    product = tensor(swap_algebra, full_matrix_algebra(1, config), config)
    assert _sizes(analyze(product, config)) == _sizes(analyze(swap_algebra, config))

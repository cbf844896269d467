"""Tests for L(G) of finite groups and the ball-based certificates."""

from pathlib import Path
import random
import sys

PROJECT_ROOT = Path(__file__).resolve().parents[1]
if str(PROJECT_ROOT) not in sys.path:
    sys.path.insert(0, str(PROJECT_ROOT))

import numpy as np
import pytest

from src.actions import TABLE_GROUPS, cyclic, group_by_name
from src.common.config import LabConfig
from src.common.errors import CapExceeded, InputError
from src.groupvna import (
    SL3Z_GENERATOR_NOTE,
    FreeGroup,
    LatticeGroup,
    ProductGroup,
    ball,
    conjugacy_class_count,
    free_subgroup_witness,
    icc_certificate,
    left_regular_algebra,
    left_translation,
    oracle_by_name,
    reduced_word_count,
    regular_block_check,
)
from src.staralg import analyze, trace


@pytest.fixture
def config():
    return LabConfig(tol=1e-9, seed=20240611)


CATALOG_GROUPS = [name for name in TABLE_GROUPS if group_by_name(name).order <= 24]


def _blocks(report):
    return sorted((block.size, round(block.weight, 9)) for block in report.blocks)


# ============================================================================
# left regular algebra
# ============================================================================


def test_regular_algebra_of_z2(config):
    report = analyze(left_regular_algebra(cyclic(2), config), config)
    assert _blocks(report) == [(1, 0.5), (1, 0.5)]


def test_regular_algebra_of_s3(config):
    report = analyze(left_regular_algebra(group_by_name("S3"), config), config)
    assert report.center_dim == 3
    assert _blocks(report) == [(1, round(1 / 6, 9)), (1, round(1 / 6, 9)), (2, round(2 / 3, 9))]


def test_regular_algebra_of_trivial_group_is_scalars(config):
    report = analyze(left_regular_algebra(cyclic(1), config), config)
    assert report.dimension == 1
    assert report.is_factor


def test_regular_trace_is_delta_at_identity(config):
    group = group_by_name("D4")
    algebra = left_regular_algebra(group, config)
    for g in group.elements:
        expected = 1.0 if g == group.identity else 0.0
        assert trace(algebra, left_translation(group, g)) == pytest.approx(expected)


@pytest.mark.parametrize("name", CATALOG_GROUPS)
def test_center_dimension_counts_conjugacy_classes(name, config):
    group = group_by_name(name)
    check = regular_block_check(group, config)
    assert check.center_dim == conjugacy_class_count(group)
    assert check.passed
    # L(G) is a factor only for the trivial group
    assert (check.center_dim == 1) == (group.order == 1)


def test_regular_cap(config):
    with pytest.raises(CapExceeded):
        left_regular_algebra(group_by_name("S4"), config.with_caps(regular_group=12))


# ============================================================================
# oracles and balls
# ============================================================================


def test_free_group_ball(config):
    assert len(ball(FreeGroup(2), 2, config)) == 17
    assert len(ball(FreeGroup(2), 3, config)) == 53


def test_lattice_ball(config):
    assert len(ball(LatticeGroup(2), 2, config)) == 13


@pytest.mark.parametrize("name", ["F2", "Z3", "SL2Z", "SL3Z", "SL2Z:A,B"])
def test_radius_zero_is_identity(name, config):
    oracle = oracle_by_name(name)
    assert ball(oracle, 0, config) == [oracle.identity]


def test_ball_cap(config):
    with pytest.raises(CapExceeded):
        ball(FreeGroup(2), 6, config.with_caps(ball_size=100))


@pytest.mark.parametrize("name", ["F2", "Z2", "SL2Z", "SL3Z", "SL2Z:A,B", "F2xZ1"])
def test_normal_form_is_a_congruence(name, config):
    oracle = oracle_by_name(name)
    pool = ball(oracle, 2, config)
    rng = random.Random(7)
    for _ in range(200):
        a, x = rng.choice(pool), rng.choice(pool)
        b = oracle.mul(oracle.mul(a, x), oracle.inv(x))
        assert oracle.normal_form(b) == oracle.normal_form(a)
        assert oracle.normal_form(oracle.mul(b, x)) == oracle.normal_form(oracle.mul(a, x))
        assert oracle.normal_form(oracle.mul(x, b)) == oracle.normal_form(oracle.mul(x, a))


def test_matrix_inverse_is_exact(config):
    oracle = oracle_by_name("SL3Z")
    for g in ball(oracle, 3, config):
        assert oracle.mul(g, oracle.inv(g)) == oracle.identity
        assert round(np.linalg.det(np.array(g, dtype=float))) == 1


def test_product_oracle_name_and_generators():
    oracle = oracle_by_name("F2xZ1")
    assert isinstance(oracle, ProductGroup)
    assert oracle.name == "F2xZ1"
    assert len(oracle.generators) == 3


@pytest.mark.parametrize("name", ["K2", "SL4Z", "F0", ""])
def test_unknown_oracle_names(name):
    with pytest.raises(InputError):
        oracle_by_name(name)


# ============================================================================
# certificates
# ============================================================================


def test_lattice_certificate_fails(config):
    certificate = icc_certificate(LatticeGroup(2), 2, 10, 2, config)
    assert certificate.min_conjugates == 1
    assert not certificate.passed


def test_free_group_certificate_passes(config):
    certificate = icc_certificate(FreeGroup(2), 1, 3, 10, config)
    assert certificate.min_conjugates >= 10
    assert certificate.passed


def test_sl3z_certificate_records_generators(config):
    certificate = icc_certificate(oracle_by_name("SL3Z"), 1, 2, 5, config)
    assert certificate.passed
    payload = certificate.as_dict()
    assert payload["generators"] == SL3Z_GENERATOR_NOTE
    assert "never a proof" in payload["evidence"]


@pytest.mark.parametrize("name", ["F2", "SL2Z:A,B", "SL2Z"])
def test_certificate_is_monotone_in_conjugator_radius(name, config):
    oracle = oracle_by_name(name)
    counts = [icc_certificate(oracle, 1, radius, 1, config).min_conjugates for radius in range(4)]
    assert counts == sorted(counts)
    assert counts[0] == 1


@pytest.mark.parametrize("name", ["Z1", "Z3"])
def test_abelian_oracles_have_singleton_classes(name, config):
    for radius in (1, 3):
        assert icc_certificate(oracle_by_name(name), 1, radius, 1, config).min_conjugates == 1


def test_certificate_radius_must_be_positive(config):
    with pytest.raises(InputError):
        icc_certificate(FreeGroup(2), 0, 2, 1, config)


def test_reduced_word_counts():
    assert [reduced_word_count(2, r) for r in range(4)] == [1, 5, 17, 53]


def test_matrices_a_b_generate_a_free_group(config):
    witness = free_subgroup_witness(oracle_by_name("SL2Z:A,B"), 4, config)
    assert witness.ball_size == 161
    assert witness.free_up_to_radius


def test_full_sl2z_is_not_free_on_s_and_t(config):
    witness = free_subgroup_witness(oracle_by_name("SL2Z"), 4, config)
    assert not witness.free_up_to_radius

"""Tests for the group-measure space construction."""

from fractions import Fraction
from pathlib import Path
import sys

PROJECT_ROOT = Path(__file__).resolve().parents[1]
if str(PROJECT_ROOT) not in sys.path:
    sys.path.insert(0, str(PROJECT_ROOT))

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.actions import (
    FiniteProbSpace,
    action_catalog,
    action_report,
    cyclic,
    disjoint_union,
    free_actions,
    group_by_name,
    make_action,
    orbit_signature,
    regular_action,
    trivial_action,
)
from src.common.config import LabConfig
from src.common.errors import CapExceeded
from src.crossed import (
    cartan_report,
    crossed_product,
    crossed_summary,
    feldman_moore_check,
    free_block_check,
    verify_relations,
    verify_trace,
)
from src.staralg import analyze, trace


@pytest.fixture
def config():
    return LabConfig(tol=1e-9, seed=20240611)


@pytest.fixture
def swap(config):
    return regular_action(cyclic(2), config)


@pytest.fixture
def trivial_two(config):
    return trivial_action(cyclic(2), FiniteProbSpace.uniform(["a", "b"]), config)


@pytest.fixture(scope="module")
def catalog():
    """Actions of groups of order <= 4 on at most 8 atoms."""
    return action_catalog(4, 8, LabConfig())


def test_swap_crossed_product_is_m2(swap, config):
    cp = crossed_product(swap, config)
    assert cp.algebra.dimension == 4
    report = analyze(cp.algebra, config)
    assert report.is_factor
    assert [(b.size, round(b.weight, 9)) for b in report.blocks] == [(2, 1.0)]


def test_trivial_group_gives_diagonal(config):
    action = trivial_action(cyclic(1), FiniteProbSpace.uniform(["a", "b", "c"]), config)
    report = analyze(crossed_product(action, config).algebra, config)
    assert report.center_dim == 3
    assert report.dimension == 3


def test_trivial_action_on_one_atom_is_group_algebra(config):
    action = trivial_action(cyclic(2), FiniteProbSpace.uniform(["p"]), config)
    report = analyze(crossed_product(action, config).algebra, config)
    assert report.center_dim == 2
    assert not report.is_factor


def test_trace_of_indicator_monomial(config):
    action = trivial_action(cyclic(2), FiniteProbSpace.uniform(["a", "b"]), config)
    cp = crossed_product(action, config)
    element = cp.element({0: np.array([1.0, 0.0]), 1: np.zeros(2)})
    assert trace(cp.algebra, element) == pytest.approx(0.5)


def test_unitaries_are_a_representation(config):
    action = regular_action(group_by_name("S3"), config)
    cp = crossed_product(action, config)
    group = action.group
    for g in group.elements:
        u = cp.unitaries[g]
        assert np.allclose(u @ u.conj().T, np.eye(cp.dim))
        for h in group.elements:
            assert np.array_equal(u @ cp.unitaries[h], cp.unitaries[group.mul(g, h)])


def test_dimension_is_group_times_atoms(catalog, config):
    for action in catalog[:20]:
        cp = crossed_product(action, config)
        assert cp.dim == action.group.order * action.space.size
        assert cp.algebra.dimension == cp.dim


def test_crossed_cap(config):
    with pytest.raises(CapExceeded):
        crossed_product(regular_action(cyclic(8), config), config.with_caps(crossed_dim=32))


def test_relations_and_trace_identities(catalog, config):
    rng = np.random.default_rng(config.seed)
    for action in catalog[:25]:
        cp = crossed_product(action, config)
        relations = verify_relations(cp, rng)
        assert relations.product_error < 1e-9
        assert relations.involution_error < 1e-9
        traces = verify_trace(cp, rng, samples=10)
        assert traces.trace_error < 1e-9
        assert traces.traciality_error < 1e-9


@settings(derandomize=True, max_examples=30, deadline=None)
@given(st.integers(0, 2**32 - 1), st.sampled_from(["Z2", "Z3", "S3", "Z2xZ2"]))
def test_trace_identities_for_any_seed(seed, name):
    config = LabConfig(tol=1e-9, seed=seed)
    cp = crossed_product(regular_action(group_by_name(name), config), config)
    rng = np.random.default_rng(seed)
    assert verify_relations(cp, rng).worst() < 1e-9
    assert verify_trace(cp, rng, samples=5).worst() < 1e-9


# ============================================================================
# Cartan diagnostics
# ============================================================================


def test_swap_diagonal_is_masa(swap, config):
    report = cartan_report(crossed_product(swap, config), config)
    assert report.is_masa
    assert report.normalizer_dense


def test_trivial_action_diagonal_is_not_masa(trivial_two, config):
    report = cartan_report(crossed_product(trivial_two, config), config)
    assert not report.is_masa
    assert report.normalizer_dense


def test_cartan_invariant_matches_orbit_signature(catalog, config):
    for action in catalog:
        report = cartan_report(crossed_product(action, config), config)
        assert report.cartan_invariant == action_report(action).signature, action.name


def test_cartan_invariant_keeps_large_denominators(config):
    group = cyclic(2)
    first = trivial_action(group, FiniteProbSpace.build(["a", "b"], [Fraction(1, 1000003), Fraction(1000002, 1000003)]), config)
    second = trivial_action(group, FiniteProbSpace.build(["a", "b"], [Fraction(1, 1000004), Fraction(1000003, 1000004)]), config)
    invariant = cartan_report(crossed_product(first, config), config).cartan_invariant
    assert invariant == orbit_signature(first)
    assert invariant.descriptors == ((Fraction(1, 1000003),), (Fraction(1000002, 1000003),))
    result = feldman_moore_check(first, second, config)
    assert (result.oe, result.cartan_equal, result.consistent) == (False, False, True)


PARTS = st.lists(
    st.tuples(
        st.sampled_from(["free", "fixed"]),
        st.fractions(min_value=Fraction(1, 10**7), max_value=1, max_denominator=10**7),
    ),
    min_size=1,
    max_size=5,
)


def union_of_parts(group, parts, config):
    """Z2 acting freely or trivially on each part, with exact part masses."""
    total = sum(mass for _, mass in parts)
    actions = [
        regular_action(group, config) if kind == "free" else trivial_action(group, FiniteProbSpace.uniform(["o"]), config)
        for kind, _ in parts
    ]
    return disjoint_union(actions, [mass / total for _, mass in parts], config)


@settings(derandomize=True, max_examples=25, deadline=None)
@given(PARTS, PARTS)
def test_cartan_invariant_for_exact_weights(first_parts, second_parts):
    config = LabConfig(tol=1e-9, seed=20240611)
    group = cyclic(2)
    first = union_of_parts(group, first_parts, config)
    second = union_of_parts(group, second_parts, config)
    assert cartan_report(crossed_product(first, config), config).cartan_invariant == orbit_signature(first)
    assert feldman_moore_check(first, second, config).consistent
    assert feldman_moore_check(first, first, config).oe


def test_masa_iff_free_over_catalog(catalog, config):
    for action in catalog:
        report = cartan_report(crossed_product(action, config), config)
        assert report.is_masa == action_report(action).is_free, action.name


def test_free_actions_factor_iff_ergodic(catalog, config):
    for action in free_actions(catalog):
        summary = crossed_summary(action, config)
        assert summary.report.is_factor == summary.is_ergodic, action.name
        assert free_block_check(action, config)


def test_skewed_free_union_blocks(config):
    regular = regular_action(cyclic(2), config)
    union = disjoint_union([regular, regular], [Fraction(1, 3), Fraction(2, 3)], config)
    report = analyze(crossed_product(union, config).algebra, config)
    assert sorted((b.size, round(b.weight, 9)) for b in report.blocks) == [(2, round(1 / 3, 9)), (2, round(2 / 3, 9))]


# ============================================================================
# Feldman-Moore
# ============================================================================


def test_feldman_moore_rotation_vs_klein(config):
    result = feldman_moore_check(regular_action(cyclic(4), config), regular_action(group_by_name("Z2xZ2"), config), config)
    assert result.oe and result.cartan_equal and result.consistent


def test_feldman_moore_swap_vs_trivial(swap, trivial_two, config):
    result = feldman_moore_check(swap, trivial_two, config)
    assert not result.oe and not result.cartan_equal
    assert result.consistent


def test_feldman_moore_self(swap, config):
    assert feldman_moore_check(swap, swap, config).consistent


def test_summary_rows_are_flat(swap, config):
    row = crossed_summary(swap, config).as_row()
    assert row["isFactor"] is True
    assert row["blocks"] == "2:1.0"


def test_float_weighted_action(config):
    space = FiniteProbSpace.build(["a", "b", "c"], [0.25, 0.25, 0.5])
    perm = {0: ["a", "b", "c"], 1: ["b", "a", "c"]}
    action = make_action(cyclic(2), space, perm, config)
    report = cartan_report(crossed_product(action, config), config)
    assert report.cartan_invariant == action_report(action).signature

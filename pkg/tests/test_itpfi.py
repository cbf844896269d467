"""Tests for ITPFI specs and T-set membership."""

from pathlib import Path
import itertools
import json
import math
import sys

PROJECT_ROOT = Path(__file__).resolve().parents[1]
if str(PROJECT_ROOT) not in sys.path:
    sys.path.insert(0, str(PROJECT_ROOT))

import numpy as np
import pandas as pd
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.common.config import LabConfig
from src.common.errors import InputError
from src.itpfi import (
    IN,
    OUT,
    UNDECIDED,
    constant_spec,
    explicit_spec,
    lattice_generator,
    load_spec,
    parse_spec_document,
    periodic_spec,
    powers_density_matrix,
    powers_lattice_grid,
    powers_lattice_member,
    powers_spec,
    tensor_spec,
    tset_membership,
    tset_scan,
    tset_term,
)

LAMBDAS = [1 / 4, 1 / 3, 1 / 2, 2 / 3]
LN2 = math.log(2)


@pytest.fixture
def config():
    return LabConfig(tol=1e-9, seed=20240611)


@pytest.fixture
def half():
    return powers_spec(0.5)


# ============================================================================
# Powers factors
# ============================================================================


def test_powers_eigenvalues(half):
    alpha = half.eigenvalues(0)
    assert alpha == pytest.approx((2 / 3, 1 / 3))
    assert sum(alpha) == pytest.approx(1.0, abs=1e-15)
    assert half.powers_ratio() == pytest.approx(0.5)


def test_powers_density_matrix():
    assert np.allclose(powers_density_matrix(0.5), np.diag([2 / 3, 1 / 3]))
    assert np.trace(powers_density_matrix(0.25)) == pytest.approx(1.0)


@pytest.mark.parametrize("lam", [0.0, 1.0, -0.5, 2.0])
def test_powers_lambda_range(lam):
    with pytest.raises(InputError):
        powers_spec(lam)


def test_term_vanishes_at_zero():
    specs = [powers_spec(0.5), constant_spec([0.5, 0.25, 0.25]), periodic_spec([[0.9, 0.1]], [[0.3, 0.7], [1.0]])]
    for spec in specs:
        for i in range(4):
            assert tset_term(spec, i, 0.0) == pytest.approx(0.0, abs=1e-15)


def test_term_vanishes_on_lattice(half):
    assert tset_term(half, 0, 2 * math.pi / LN2) < 1e-12


def test_term_is_positive_constant_off_lattice(half):
    values = [tset_term(half, i, 1.0) for i in range(10)]
    assert values[0] > 0
    assert all(v == values[0] for v in values)


def test_closed_form_identity(half):
    a1, a2 = 2 / 3, 1 / 3
    for t in [0.3, 1.0, 2.7, -5.0]:
        phase = t * math.log(0.5)
        closed = 1 - math.sqrt(1 - a1 * a2 * abs(complex(math.cos(phase), math.sin(phase)) - 1) ** 2)
        assert tset_term(half, 0, t) == pytest.approx(closed, abs=1e-14)


# ============================================================================
# membership
# ============================================================================


def test_zero_is_always_in(half):
    assert tset_membership(half, 0.0).status == IN
    assert tset_membership(constant_spec([0.2, 0.3, 0.5]), 0.0).status == IN


def test_off_lattice_is_out(half):
    verdict = tset_membership(half, 1.0)
    assert verdict.status == OUT
    assert verdict.max_block_term > 1e-12


@pytest.mark.parametrize("lam", LAMBDAS)
def test_powers_lattice_points_are_in(lam, config):
    for t in powers_lattice_grid(lam, range(-5, 6)):
        assert tset_membership(powers_spec(lam), t, config=config).status == IN
        assert powers_lattice_member(lam, t)


@pytest.mark.parametrize("lam", LAMBDAS)
def test_random_non_lattice_points_are_out(lam, config):
    rng = np.random.default_rng(config.seed)
    step = lattice_generator(lam)
    spec = powers_spec(lam)
    checked = 0
    for t in rng.uniform(-20, 20, size=120):
        ratio = t / step
        if abs(ratio - round(ratio)) < 1e-4:
            continue
        checked += 1
        verdict = tset_membership(spec, float(t), config=config)
        assert verdict.status == OUT
        assert powers_lattice_member(lam, float(t)) is False
    assert checked >= 100


def test_closed_form_agrees_with_series_on_mixed_grid():
    for lam in LAMBDAS:
        spec = powers_spec(lam)
        step = lattice_generator(lam)
        for k in range(-12, 13):
            t = k * step / 4
            series = tset_membership(spec, t).status == IN
            assert series == powers_lattice_member(lam, t)
            assert series == (k % 4 == 0)


def test_three_eigenvalue_lattice():
    spec = constant_spec([0.5, 0.25, 0.25])
    assert tset_membership(spec, 2 * math.pi / LN2).status == IN
    assert tset_membership(spec, math.pi / LN2).status == OUT
    assert tset_term(spec, 0, math.pi / LN2) == pytest.approx(1.0)


def test_periodic_prefix_does_not_matter():
    spec = periodic_spec([[0.5, 0.5], [0.9, 0.1]], [[1]])
    for t in [0.5, 1.0, 3.3]:
        assert tset_term(spec, 0, t) > 0
        assert tset_membership(spec, t).status == IN


def test_two_block_periodic_spec_intersects_lattices():
    spec = periodic_spec([], [powers_spec(0.5).eigenvalues(0), powers_spec(0.25).eigenvalues(0)])
    assert tset_membership(spec, 2 * math.pi / LN2).status == IN
    # on the R_{1/4} lattice but not on the R_{1/2} lattice
    assert tset_membership(spec, math.pi / LN2).status == OUT


def test_explicit_spec_is_undecided():
    spec = explicit_spec([[0.5, 0.5], [2 / 3, 1 / 3], [0.25, 0.75]])
    verdict = tset_membership(spec, 1.0)
    assert verdict.status == UNDECIDED
    assert verdict.terms == 3
    assert verdict.partial_sum == pytest.approx(sum(tset_term(spec, i, 1.0) for i in range(3)))
    truncated = tset_membership(spec, 1.0, max_terms=2)
    assert truncated.terms == 2
    assert truncated.as_dict()["partialSum"] == pytest.approx(tset_term(spec, 0, 1.0) + tset_term(spec, 1, 1.0))


def test_explicit_spec_index_range():
    with pytest.raises(InputError):
        tset_term(explicit_spec([[1]]), 1, 0.0)


@pytest.mark.parametrize(
    "values",
    [[0.5, 0.4], [1.2, -0.2], [], [0.5, 0.5, 0.0]],
)
def test_eigenvalue_validation(values):
    with pytest.raises(InputError):
        constant_spec(values)


# ============================================================================
# properties
# ============================================================================


def _normalized(values):
    total = math.fsum(values)
    return [v / total for v in values]


_EIGENVALUES = st.lists(st.floats(0.01, 1.0), min_size=1, max_size=4).map(_normalized)
_T = st.floats(-50.0, 50.0, allow_nan=False)


@settings(derandomize=True, max_examples=200, deadline=None)
@given(_EIGENVALUES, _T)
def test_term_lies_in_unit_interval_and_is_even(values, t):
    spec = constant_spec(values)
    term = tset_term(spec, 0, t)
    assert 0.0 <= term <= 1.0
    assert tset_term(spec, 0, -t) == pytest.approx(term, abs=1e-15)
    assert tset_membership(spec, t).status == tset_membership(spec, -t).status


@settings(derandomize=True, max_examples=200, deadline=None)
@given(st.sampled_from(LAMBDAS), st.integers(-10, 10), st.integers(-10, 10))
def test_lattice_sums_stay_in(lam, m1, m2):
    spec = powers_spec(lam)
    step = lattice_generator(lam)
    assert tset_membership(spec, m1 * step).status == IN
    assert tset_membership(spec, m2 * step).status == IN
    assert tset_membership(spec, (m1 + m2) * step).status == IN


def test_members_of_periodic_spec_are_closed_under_addition():
    spec = periodic_spec([[0.3, 0.7]], [[0.5, 0.25, 0.25], [2 / 3, 1 / 3]])
    grid = [k * math.pi / (2 * LN2) for k in range(-12, 13)]
    members = tset_scan(spec, grid).members()
    assert 0.0 in members
    assert len(members) > 1
    for t1, t2 in itertools.product(members, repeat=2):
        assert tset_membership(spec, t1 + t2).status == IN


# ============================================================================
# scans
# ============================================================================


def test_scan_lattice_grid_is_all_in(half):
    table = tset_scan(half, powers_lattice_grid(0.5, range(0, 6)))
    assert table.verdicts() == [IN] * 6


def test_scan_zero_grid(half):
    assert tset_scan(half, [0.0]).verdicts() == [IN]


def test_scan_irrational_multiples_are_out(half):
    step = lattice_generator(0.5)
    grid = [math.sqrt(2) * step, math.pi * step, math.e * step]
    assert tset_scan(half, grid).verdicts() == [OUT] * 3


def test_scan_frame_and_csv(half, tmp_path):
    table = tset_scan(half, [0.0, 1.0])
    frame = table.to_frame()
    assert list(frame.columns) == ["t", "verdict", "maxBlockTerm"]
    path = tmp_path / "scan.csv"
    frame.to_csv(path, index=False)
    loaded = pd.read_csv(path)
    assert loaded["verdict"].tolist() == [IN, OUT]
    assert loaded["maxBlockTerm"].iloc[1] > 0


# ============================================================================
# tensor products
# ============================================================================


def test_tensor_of_powers_with_itself(half):
    doubled = tensor_spec(half, half)
    assert doubled.kind == "periodic"
    assert doubled.cycle == (half.eigenvalues(0), half.eigenvalues(0))
    grid = [k * lattice_generator(0.5) / 3 for k in range(-9, 10)]
    assert tset_scan(doubled, grid).verdicts() == tset_scan(half, grid).verdicts()


def test_tensor_with_trivial_factor(half):
    trivial = constant_spec([1])
    combined = tensor_spec(half, trivial)
    for t in [0.0, 1.0, 2 * math.pi / LN2, 7.5]:
        assert tset_membership(combined, t).status == tset_membership(half, t).status


def test_tensor_interleaves_factors(half):
    other = periodic_spec([[0.5, 0.5]], [[0.1, 0.9], [0.2, 0.3, 0.5]])
    combined = tensor_spec(other, half)
    for i in range(12):
        assert combined.eigenvalues(2 * i) == other.eigenvalues(i)
        assert combined.eigenvalues(2 * i + 1) == half.eigenvalues(i)
        assert math.fsum(combined.eigenvalues(i)) == pytest.approx(1.0, abs=1e-12)


def test_tensor_with_explicit_is_explicit(half):
    finite = explicit_spec([[0.5, 0.5], [0.25, 0.75]])
    combined = tensor_spec(finite, half)
    assert combined.kind == "explicit"
    assert combined.length == 4
    assert tset_membership(combined, 1.0).status == UNDECIDED


# ============================================================================
# documents
# ============================================================================


def test_powers_document(half):
    spec = parse_spec_document({"kind": "powers", "lambda": 0.5})
    assert spec == half


def test_periodic_document_accepts_fractions():
    spec = parse_spec_document({"kind": "periodic", "prefix": [], "cycle": [["1/3", "2/3"], [1]]})
    assert spec.eigenvalues(0) == pytest.approx((1 / 3, 2 / 3))
    assert spec.eigenvalues(1) == (1.0,)


def test_unknown_kind_is_rejected():
    with pytest.raises(InputError, match="invalid ITPFI spec"):
        parse_spec_document({"kind": "gaussian"})


def test_lambda_out_of_range_is_rejected():
    with pytest.raises(InputError, match="lambda"):
        parse_spec_document({"kind": "powers", "lambda": 1.5})


def test_bad_eigenvalues_name_the_source():
    with pytest.raises(InputError, match="spec.json"):
        parse_spec_document({"kind": "constant", "eigenvalues": [0.5, 0.4]}, source="spec.json")


def test_load_spec(tmp_path):
    path = tmp_path / "half.json"
    path.write_text(json.dumps({"kind": "constant", "eigenvalues": [0.75, 0.25]}), encoding="utf-8")
    spec = load_spec(path)
    assert spec.name == "half"
    assert spec.powers_ratio() == pytest.approx(1 / 3)


def test_load_spec_malformed_json(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text('{"kind": "powers", ', encoding="utf-8")
    with pytest.raises(InputError, match="line"):
        load_spec(path)

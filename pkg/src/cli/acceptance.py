"""
Acceptance suites: property checks over deterministic catalogs.

Reports hold counts and verdicts only, so two runs with the same seed serialize
identically; timings go to the log.
"""

from __future__ import annotations

import itertools
import logging
import math
import time
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence

import numpy as np
import pandas as pd
import scipy.linalg
from tqdm import tqdm

from ..actions.catalog import action_catalog
from ..actions.groups import TABLE_GROUPS, alternating, cyclic, direct_product, group_by_name, subgroup_closure
from ..actions.operations import action_report
from ..common.config import LabConfig
from ..common.errors import InputError
from ..crossed.construction import cartan_report, crossed_product, crossed_summary, verify_relations, verify_trace
from ..groupvna.certificates import icc_certificate
from ..groupvna.oracles import oracle_by_name
from ..groupvna.regular import regular_block_check
from ..itpfi.series import (
    lattice_generator,
    periodic_spec,
    powers_lattice_grid,
    powers_lattice_member,
    powers_spec,
    tset_membership,
    tset_term,
)
from ..mekler.centralizer import brute_force_centralizer, char_support_centralizer
from ..mekler.graphs import complete_graph, empty_graph, labeled_graphs
from ..mekler.group import (
    as_fin_group,
    mekler_group,
    mekler_inv,
    mekler_inv_batch,
    mekler_mul,
    mekler_mul_batch,
    mekler_order,
    random_elements,
)
from ..mekler.iso import exact_iso, fingerprint_collisions, graph_iso
from ..mekler.niceness import nice_catalog
from ..mekler.semidirect import copies_semidirect
from ..redux.e0 import all_bits, e0_equivalent, repeat_period, unroll
from ..redux.harness import run_harness
from ..staralg.algebra import commutant, generate_algebra, same_span
from .io import dump_json

LOGGER = logging.getLogger(__name__)

POWERS_LAMBDAS = (1 / 4, 1 / 3, 1 / 2, 2 / 3)


@dataclass
class SuiteResult:
    name: str
    title: str
    passed: bool
    details: Dict = field(default_factory=dict)

    def as_dict(self) -> Dict:
        return {"suite": self.name, "title": self.title, "passed": self.passed, "details": self.details}


Suite = Callable[[LabConfig, bool], SuiteResult]


def _catalog(config: LabConfig, quick: bool):
    return action_catalog(4, 8, config) if quick else action_catalog(8, 12, config)


# ============================================================================
# algebra and actions
# ============================================================================


def factor_law(config: LabConfig, quick: bool) -> SuiteResult:
    free = [a for a in _catalog(config, quick) if action_report(a).is_free]
    mismatches = []
    for action in free:
        summary = crossed_summary(action, config)
        if summary.report.is_factor != summary.is_ergodic:
            mismatches.append(action.name)
    return SuiteResult(
        "factor-law", "free actions: factor iff ergodic", not mismatches, {"checked": len(free), "mismatches": mismatches}
    )


def masa(config: LabConfig, quick: bool) -> SuiteResult:
    actions = _catalog(config, quick)
    forward, converse = [], []
    for action in actions:
        is_free = action_report(action).is_free
        is_masa = cartan_report(crossed_product(action, config), config).is_masa
        if is_free and not is_masa:
            forward.append(action.name)
        if is_masa and not is_free:
            converse.append(action.name)
    return SuiteResult(
        "masa",
        "L∞(X) is a MASA iff the action is free",
        not forward and not converse,
        {"checked": len(actions), "forwardFailures": forward, "converseFailures": converse},
    )


def trace_identities(config: LabConfig, quick: bool) -> SuiteResult:
    rng = np.random.default_rng(config.seed)
    samples = 10 if quick else 100
    worst = 0.0
    actions = _catalog(config, quick)
    for action in actions:
        cp = crossed_product(action, config)
        worst = max(worst, verify_relations(cp, rng).worst(), verify_trace(cp, rng, samples).worst())
    return SuiteResult(
        "trace",
        "trace display and traciality on crossed products",
        worst < 1e-9,
        {"checked": len(actions), "samples": samples, "withinTolerance": worst < 1e-9},
    )


def feldman_moore(config: LabConfig, quick: bool) -> SuiteResult:
    report = run_harness("feldman-moore", config, quick)
    return SuiteResult("feldman-moore", "orbit equivalence iff equal Cartan invariants", report.holds, report.as_dict())


def _random_generators(rng: np.random.Generator, d: int) -> List[np.ndarray]:
    """Block-diagonal elements with random multiplicities, rotated by a random unitary."""
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
        blocks = [np.kron(rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n)), np.eye(m)) for n, m in sizes]
        gens.append(unitary @ scipy.linalg.block_diag(*blocks) @ unitary.conj().T)
    return gens


def double_commutant(config: LabConfig, quick: bool) -> SuiteResult:
    rng = np.random.default_rng(config.seed)
    trials = 10 if quick else 50
    failures = []
    for trial in range(trials):
        d = 2 + trial % 5
        algebra = generate_algebra(d, _random_generators(rng, d), config)
        if not same_span(commutant(commutant(algebra, config), config), algebra):
            failures.append(trial)
    return SuiteResult("double-commutant", "A'' = A on random subalgebras", not failures, {"trials": trials, "failures": failures})


def group_blocks(config: LabConfig, quick: bool) -> SuiteResult:
    limit = 8 if quick else 24
    groups = [group_by_name(name) for name in TABLE_GROUPS]
    checks = [regular_block_check(group, config) for group in groups if group.order <= limit]
    failed = [check.group for check in checks if not check.passed]
    return SuiteResult(
        "group-blocks",
        "L(G): centerDim = #classes, block weights n²/|G|",
        not failed,
        {"groups": [check.group for check in checks], "failures": failed},
    )


def icc(config: LabConfig, quick: bool) -> SuiteResult:
    lattice = [icc_certificate(oracle_by_name("Z2"), r, big_r, 2, config) for r, big_r in ((1, 1), (1, 3), (2, 4))]
    free = icc_certificate(oracle_by_name("F2"), 1, 3, 10, config)
    sl3 = icc_certificate(oracle_by_name("SL3Z"), 1, 2, 5, config)
    passed = all(c.min_conjugates == 1 and not c.passed for c in lattice) and free.passed and sl3.passed
    return SuiteResult(
        "icc",
        "finite ICC certificates",
        passed,
        {"Z2": [c.as_dict() for c in lattice], "F2": free.as_dict(), "SL3Z": sl3.as_dict()},
    )


# ============================================================================
# Mekler groups
# ============================================================================


def mekler_laws(config: LabConfig, quick: bool) -> SuiteResult:
    pair = mekler_group(empty_graph(2), 3)
    elements = list(pair.elements())
    exhaustive = all(
        mekler_mul(pair, mekler_mul(pair, x, y), z) == mekler_mul(pair, x, mekler_mul(pair, y, z))
        for x, y, z in itertools.product(elements, repeat=3)
    ) and all(mekler_mul(pair, x, mekler_inv(pair, x)) == pair.identity for x in elements)
    rng = np.random.default_rng(config.seed)
    count = 10_000 if quick else 100_000
    sampled = []
    inverses = []
    for graph in nice_catalog(5):
        group = mekler_group(graph, 3)
        x, y, z = (random_elements(group, rng, count) for _ in range(3))
        left = mekler_mul_batch(group, mekler_mul_batch(group, x, y), z)
        right = mekler_mul_batch(group, x, mekler_mul_batch(group, y, z))
        sampled.append(bool(np.array_equal(left, right)))
        identity = np.zeros_like(x)
        inverses.append(bool(np.array_equal(mekler_mul_batch(group, x, mekler_inv_batch(group, x)), identity)))
    orders = []
    for n in range(1, 4):
        for graph in labeled_graphs(n):
            group = mekler_group(graph, 3)
            fin = as_fin_group(group, config)
            orders.append(len(subgroup_closure(fin, fin.generators)) == 3 ** mekler_order(group))
    return SuiteResult(
        "mekler-laws",
        "Mekler group law, inverses and order",
        exhaustive and all(sampled) and all(inverses) and all(orders),
        {
            "exhaustivePair": exhaustive,
            "sampledGraphs": len(sampled),
            "sampledAssociativity": all(sampled),
            "sampledInverses": all(inverses),
            "inverseChecks": len(inverses),
            "triplesPerGraph": count,
            "ordersChecked": len(orders),
        },
    )


def mekler_biconditional(config: LabConfig, quick: bool) -> SuiteResult:
    small = nice_catalog(4, labeled=True)
    disagreements = 0
    for first, second in itertools.combinations_with_replacement(small, 2):
        if exact_iso(first, second, 3, config) != (graph_iso(first, second, config) is not None):
            disagreements += 1
    report = run_harness("mekler-fingerprint", config, quick)
    collisions = fingerprint_collisions(nice_catalog(5, labeled=True), 3, config)
    return SuiteResult(
        "mekler-biconditional",
        "exact GL(n,3) isomorphism iff graph isomorphism; fingerprint reduction",
        disagreements == 0 and report.holds,
        {
            "exactPairs": len(small) * (len(small) + 1) // 2,
            "disagreements": disagreements,
            "fingerprintReduction": report.as_dict(),
            "fingerprintCollisions": [c.as_dict() for c in collisions],
        },
    )


def centralizer(config: LabConfig, quick: bool) -> SuiteResult:
    groups = [cyclic(2), alternating(5), group_by_name("A5xZ2")]
    if not quick:
        groups.append(direct_product(alternating(5), copies_semidirect(complete_graph(2), 2, 3, config)))
    rows = []
    for group in groups:
        report = char_support_centralizer(group, config)
        brute = brute_force_centralizer(group, config)
        rows.append(
            {
                "group": group.name,
                "centralizerOrder": len(report.centralizer),
                "matchesBruteForce": set(report.centralizer) == set(brute),
            }
        )
    return SuiteResult(
        "centralizer",
        "character-support centralizer against brute force",
        all(row["matchesBruteForce"] for row in rows),
        {"groups": rows},
    )


# ============================================================================
# T-sets and E₀
# ============================================================================


def powers_lattice(config: LabConfig, quick: bool) -> SuiteResult:
    rng = np.random.default_rng(config.seed)
    lattice_failures, off_failures, disagreements = 0, 0, 0
    for lam in POWERS_LAMBDAS:
        spec = powers_spec(lam)
        for t in powers_lattice_grid(lam, range(-5, 6)):
            if not tset_membership(spec, t, config=config).is_in:
                lattice_failures += 1
        step = lattice_generator(lam)
        checked = 0
        while checked < 100:
            t = float(rng.uniform(-20, 20))
            if abs(t / step - round(t / step)) < 1e-4:
                continue
            checked += 1
            series = tset_membership(spec, t, config=config).is_in
            off_failures += series
            disagreements += series != powers_lattice_member(lam, t, config.zero_tol)
    return SuiteResult(
        "powers-lattice",
        "T(R_λ) = (2π/|ln λ|)ℤ",
        lattice_failures == 0 and off_failures == 0 and disagreements == 0,
        {"lambdas": list(POWERS_LAMBDAS), "latticeFailures": lattice_failures, "offLatticeIn": off_failures, "closedFormDisagreements": disagreements},
    )


def _subgroup_specs():
    return [
        powers_spec(0.5),
        periodic_spec([], [powers_spec(0.5).eigenvalues(0), powers_spec(0.25).eigenvalues(0)]),
        periodic_spec([[0.3, 0.7]], [[0.5, 0.25, 0.25], [1.0]]),
    ]


def tset_subgroup(config: LabConfig, quick: bool) -> SuiteResult:
    rng = np.random.default_rng(config.seed)
    step = 2 * math.pi / math.log(2)
    zero_failures, even_failures, closure_failures = 0, 0, 0
    for spec in _subgroup_specs():
        zero_failures += not tset_membership(spec, 0.0, config=config).is_in
        for t in rng.uniform(-30, 30, size=50):
            even_failures += abs(tset_term(spec, 0, t) - tset_term(spec, 0, -t)) > 1e-12
        for _ in range(200):
            # the lattice (2π/ln 2)ℤ together with half-steps, so some points fall outside
            t1, t2 = (float(k) * step / 2 for k in rng.integers(-10, 11, size=2))
            if tset_membership(spec, t1, config=config).is_in and tset_membership(spec, t2, config=config).is_in:
                closure_failures += not tset_membership(spec, t1 + t2, config=config).is_in
    return SuiteResult(
        "tset-subgroup",
        "0 ∈ T, evenness, In + In ⟹ In",
        zero_failures == 0 and even_failures == 0 and closure_failures == 0,
        {"zeroFailures": zero_failures, "evennessFailures": even_failures, "closureFailures": closure_failures},
    )


def e0_fragment(config: LabConfig, quick: bool) -> SuiteResult:
    samples = all_bits(2, 2) if quick else all_bits(3, 3)
    relation = np.array([[e0_equivalent(x, y) for y in samples] for x in samples])
    reflexive = bool(relation.diagonal().all())
    symmetric = bool((relation == relation.T).all())
    composed = (relation.astype(np.int64) @ relation.astype(np.int64)) > 0
    transitive = not bool((composed & ~relation).any())
    invariant = all(
        e0_equivalent(variant, y) == e0_equivalent(x, y)
        for x in all_bits(2, 2)
        for variant in (unroll(x, 1), repeat_period(x, 2))
        for y in all_bits(2, 2)
    )
    return SuiteResult(
        "e0",
        "E₀ on eventually periodic sequences",
        reflexive and symmetric and transitive and invariant,
        {
            "samples": len(samples),
            "reflexive": reflexive,
            "symmetric": symmetric,
            "transitive": transitive,
            "representationInvariant": invariant,
        },
    )


def determinism(config: LabConfig, quick: bool) -> SuiteResult:
    """Two quick runs of every other suite under one seed must serialize identically."""
    replayed = [name for name in SUITES if name != "determinism"]
    first = [dump_json(r.as_dict()) for r in run_acceptance(config, replayed, quick=True)]
    second = [dump_json(r.as_dict()) for r in run_acceptance(config, replayed, quick=True)]
    differing = [name for name, a, b in zip(replayed, first, second) if a != b]
    return SuiteResult(
        "determinism",
        "identical reports for identical seeds",
        first == second,
        {"replayed": replayed, "seed": config.seed, "differing": differing},
    )


SUITES: Dict[str, Suite] = {
    "factor-law": factor_law,
    "masa": masa,
    "trace": trace_identities,
    "feldman-moore": feldman_moore,
    "double-commutant": double_commutant,
    "group-blocks": group_blocks,
    "icc": icc,
    "mekler-laws": mekler_laws,
    "mekler-biconditional": mekler_biconditional,
    "powers-lattice": powers_lattice,
    "tset-subgroup": tset_subgroup,
    "e0": e0_fragment,
    "centralizer": centralizer,
    "determinism": determinism,
}


def run_acceptance(
    config: LabConfig,
    suites: Optional[Sequence[str]] = None,
    quick: bool = False,
) -> List[SuiteResult]:
    names = list(suites) if suites else list(SUITES)
    unknown = [name for name in names if name not in SUITES]
    if unknown:
        raise InputError(f"unknown suite(s) {unknown} (known: {', '.join(SUITES)})")
    results = []
    for name in tqdm(names, desc="acceptance", disable=not config.progress):
        started = time.perf_counter()
        result = SUITES[name](config, quick)
        LOGGER.info("Suite %s: %s in %.2fs.", name, "pass" if result.passed else "FAIL", time.perf_counter() - started)
        results.append(result)
    return results


def acceptance_frame(results: Sequence[SuiteResult]) -> pd.DataFrame:
    return pd.DataFrame(
        [{"suite": r.name, "passed": r.passed, "title": r.title} for r in results],
        columns=["suite", "passed", "title"],
    )

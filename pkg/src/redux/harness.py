"""
Finite checks of reductions x E y ⟺ f(x) F f(y), and the wired instances.

Passing on a sample is evidence about that sample only; no report claims a Borel
reduction.
"""

from __future__ import annotations

import itertools
import logging
import math
from dataclasses import dataclass
from typing import Callable, Dict, List, Sequence, Tuple, TypeVar

from tqdm import tqdm

from ..actions.catalog import action_catalog
from ..actions.operations import orbit_equivalent
from ..common.config import LabConfig, default_config
from ..common.errors import InputError
from ..crossed.construction import cartan_invariant, crossed_product
from ..itpfi.models import ITPFISpec, PERIODIC
from ..itpfi.series import powers_spec, tset_membership
from ..mekler.fingerprint import graph_fingerprint
from ..mekler.iso import graph_iso
from ..mekler.niceness import nice_catalog
from .e0 import all_bits, e0_equivalent
from .models import E_SIDE, F_SIDE, Counterexample, EventuallyPeriodicBits, ReductionReport

LOGGER = logging.getLogger(__name__)

X = TypeVar("X")
Y = TypeVar("Y")


def verify_reduction(
    samples: Sequence[X],
    e_relation: Callable[[X, X], bool],
    f_map: Callable[[X], Y],
    f_relation: Callable[[Y, Y], bool],
    config: LabConfig | None = None,
    name: str = "reduction",
    describe: Callable[[X], str] = str,
) -> ReductionReport:
    """Check every unordered pair of ``samples``; failures are recorded, never raised."""
    config = config or default_config()
    images = [f_map(x) for x in samples]
    report = ReductionReport(name)
    pairs = itertools.combinations(range(len(samples)), 2)
    total = math.comb(len(samples), 2)
    for i, j in tqdm(pairs, total=total, desc=name, disable=not config.progress):
        report.pairs += 1
        related = bool(e_relation(samples[i], samples[j]))
        mapped = bool(f_relation(images[i], images[j]))
        if related == mapped:
            continue
        report.failures += 1
        if len(report.counterexamples) < config.max_counterexamples:
            side = E_SIDE if related else F_SIDE
            report.counterexamples.append(Counterexample(describe(samples[i]), describe(samples[j]), side))
    if report.failures:
        LOGGER.warning("%s: %s of %s pair(s) fail the biconditional.", name, report.failures, report.pairs)
    else:
        LOGGER.info("%s: biconditional holds on all %s pair(s).", name, report.pairs)
    return report


# ============================================================================
# wired harnesses
# ============================================================================


# state ratio attached to each bit by the e0-tset harness
E0_LAMBDAS = {"0": 0.5, "1": 0.25}
E0_GRID = tuple(k * math.pi / (2 * math.log(2)) for k in range(-8, 9))


def bits_to_spec(bits: EventuallyPeriodicBits) -> ITPFISpec:
    """Bit b becomes one factor of R_{λ_b}."""
    state = {b: powers_spec(lam).eigenvalues(0) for b, lam in E0_LAMBDAS.items()}
    return ITPFISpec(
        PERIODIC,
        prefix=tuple(state[b] for b in bits.prefix),
        cycle=tuple(state[b] for b in bits.period),
        name=str(bits),
    )


def tset_signature(spec: ITPFISpec, grid: Sequence[float] = E0_GRID, config: LabConfig | None = None) -> Tuple[bool, ...]:
    config = config or default_config()
    return tuple(tset_membership(spec, t, config=config).is_in for t in grid)


def mekler_fingerprint_harness(config: LabConfig, quick: bool = False) -> ReductionReport:
    graphs = nice_catalog(4 if quick else 5, labeled=True)
    return verify_reduction(
        graphs,
        lambda a, b: graph_iso(a, b, config) is not None,
        lambda g: graph_fingerprint(g, 3, config),
        lambda a, b: a == b,
        config,
        name="mekler-fingerprint",
        describe=lambda g: f"{g.n}:{sorted(g.edges)}",
    )


def feldman_moore_harness(config: LabConfig, quick: bool = False) -> ReductionReport:
    actions = action_catalog(4, 8, config) if quick else action_catalog(8, 12, config)
    return verify_reduction(
        actions,
        orbit_equivalent,
        lambda action: cartan_invariant(crossed_product(action, config), config),
        lambda a, b: a == b,
        config,
        name="feldman-moore",
        describe=lambda action: action.name,
    )


def e0_tset_harness(config: LabConfig, quick: bool = False) -> ReductionReport:
    """Reported only: equal tails give equal T-sets, but distinct tails can share one."""
    samples = all_bits(1, 2) if quick else all_bits(2, 2)
    report = verify_reduction(
        samples,
        e0_equivalent,
        lambda bits: tset_signature(bits_to_spec(bits), config=config),
        lambda a, b: a == b,
        config,
        name="e0-tset",
    )
    report.asserted = False
    return report


@dataclass(frozen=True)
class Harness:
    name: str
    description: str
    run: Callable[[LabConfig, bool], ReductionReport]
    asserted: bool = True


HARNESSES: Dict[str, Harness] = {
    harness.name: harness
    for harness in (
        Harness(
            "mekler-fingerprint",
            "nice graphs under isomorphism → Mekler group fingerprints under equality",
            mekler_fingerprint_harness,
        ),
        Harness(
            "feldman-moore",
            "finite actions under orbit equivalence → Cartan inclusions under invariant equality",
            feldman_moore_harness,
        ),
        Harness(
            "e0-tset",
            "eventually periodic bits under E₀ → periodic ITPFI specs under T-set equality on a grid",
            e0_tset_harness,
            asserted=False,
        ),
    )
}


def harness_names() -> List[str]:
    return list(HARNESSES)


def run_harness(name: str, config: LabConfig | None = None, quick: bool = False) -> ReductionReport:
    config = config or default_config()
    harness = HARNESSES.get(name)
    if harness is None:
        raise InputError(f"unknown harness '{name}' (known: {', '.join(HARNESSES)})")
    return harness.run(config, quick)

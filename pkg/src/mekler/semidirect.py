"""
Finite stand-ins for G(Γ_copies) ⋊ H: semidirect products with verified automorphisms.
"""

from __future__ import annotations

import itertools
import logging
import random
from typing import Callable, Dict

from ..actions.groups import FinGroup, Label, cyclic
from ..common.config import LabConfig, default_config
from ..common.errors import NotAnAutomorphism, check_cap
from .graphs import SimpleGraph, copies_graph, copy_permutation
from .group import DEFAULT_PRIME, as_fin_group, mekler_group
from .iso import GroupIsomorphism, induced_group_iso

LOGGER = logging.getLogger(__name__)

Automorphism = Callable[[Label], Label]


def _check_automorphisms(
    base: FinGroup,
    acting: FinGroup,
    act: Callable[[Label], Automorphism],
    config: LabConfig,
    samples: int,
) -> None:
    rng = random.Random(config.seed)
    elements = base.elements
    for h in acting.elements:
        phi = act(h)
        for _ in range(samples):
            x, y = rng.choice(elements), rng.choice(elements)
            if phi(base.mul(x, y)) != base.mul(phi(x), phi(y)):
                raise NotAnAutomorphism(f"act({h!r}) is not a homomorphism on ({x!r}, {y!r})")
        if len(elements) <= config.caps.group_order and len({phi(x) for x in elements}) != len(elements):
            raise NotAnAutomorphism(f"act({h!r}) is not injective on {base.name}")
    for h1, h2 in itertools.product(acting.elements, repeat=2):
        x = rng.choice(elements)
        if act(acting.mul(h1, h2))(x) != act(h1)(act(h2)(x)):
            raise NotAnAutomorphism(f"act is not a homomorphism of {acting.name} at ({h1!r}, {h2!r})")


def semidirect_with(
    base: FinGroup,
    acting: FinGroup,
    act: Callable[[Label], Automorphism],
    config: LabConfig | None = None,
    samples: int = 200,
) -> FinGroup:
    """G ⋊ H with (g, h)(g', h') = (g·act(h)(g'), hh')."""
    config = config or default_config()
    check_cap("semidirect_order", config.caps.semidirect_order, base.order * acting.order)
    _check_automorphisms(base, acting, act, config, samples)

    def law(x, y):
        return base.mul(x[0], act(x[1])(y[0])), acting.mul(x[1], y[1])

    def inverse(x):
        h_inv = acting.inv(x[1])
        return act(h_inv)(base.inv(x[0])), h_inv

    generators = [(g, acting.identity) for g in base.generators] + [(base.identity, h) for h in acting.generators]
    group = FinGroup(
        f"{base.name}⋊{acting.name}",
        identity=(base.identity, acting.identity),
        law=law,
        inverse=inverse,
        generators=generators,
        order=base.order * acting.order,
        enumerate_fn=lambda: itertools.product(base.elements, acting.elements),
    )
    LOGGER.info("Semidirect product %s of order %s.", group.name, group.order)
    return group


def copies_semidirect(
    graph: SimpleGraph,
    copies: int,
    p: int = DEFAULT_PRIME,
    config: LabConfig | None = None,
) -> FinGroup:
    """G(k copies of Γ) ⋊ ℤ/k, with j ∈ ℤ/k shifting copy i to copy i + j."""
    config = config or default_config()
    mekler = mekler_group(copies_graph(graph, copies, config), p)
    base = as_fin_group(mekler, config, name=f"G({copies}x{graph.name or 'G'})")
    acting = cyclic(copies)
    check_cap("semidirect_order", config.caps.semidirect_order, base.order * acting.order)
    lifts: Dict[int, GroupIsomorphism] = {
        j: induced_group_iso(
            copy_permutation(graph, copies, [(i + j) % copies for i in range(copies)]), mekler, mekler, config
        )
        for j in acting.elements
    }
    return semidirect_with(base, acting, lambda j: lifts[j], config)

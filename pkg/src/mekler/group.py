"""
G(Γ): the class-2, exponent-p group whose generators x_v commute exactly along edges.

Normal form (a, b): a ∈ 𝔽_p^V, b ∈ 𝔽_p^{non-edges}, with

    (a, b)·(a', b') = (a + a', b + b' + χ(a, a'))

where, on a non-edge {s, t} with s before t in the vertex order, χ(a, a')_{st} = a_t·a'_s.
The element (0, δ_{st}) is the commutator [x_t, x_s] = x_t⁻¹ x_s⁻¹ x_t x_s.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from typing import Iterator, List, NamedTuple, Optional, Sequence, Tuple

import numpy as np
import sympy

from ..actions.groups import FinGroup
from ..common.config import LabConfig, default_config
from ..common.errors import InputError, check_cap
from .graphs import Edge, SimpleGraph

LOGGER = logging.getLogger(__name__)

DEFAULT_PRIME = 3


class MeklerElement(NamedTuple):
    a: Tuple[int, ...]
    b: Tuple[int, ...]


@dataclass(frozen=True)
class MeklerGroup:
    graph: SimpleGraph
    p: int = DEFAULT_PRIME
    vertex_order: Tuple[int, ...] = ()
    non_edges: Tuple[Edge, ...] = field(default=(), init=False)

    def __post_init__(self) -> None:
        if self.p < 3 or not sympy.isprime(self.p):
            raise InputError(f"p must be an odd prime, got {self.p}")
        order = self.vertex_order or tuple(range(self.graph.n))
        if sorted(order) != list(range(self.graph.n)):
            raise InputError(f"vertex order {list(order)} is not a permutation of {self.graph.n} vertices")
        position = {v: i for i, v in enumerate(order)}
        pairs = []
        for u, v in self.graph.non_edges():
            s, t = (u, v) if position[u] < position[v] else (v, u)
            pairs.append((s, t))
        pairs.sort(key=lambda st: (position[st[0]], position[st[1]]))
        object.__setattr__(self, "vertex_order", tuple(order))
        object.__setattr__(self, "non_edges", tuple(pairs))

    @property
    def rank(self) -> int:
        return self.graph.n

    @property
    def order_exponent(self) -> int:
        return self.graph.n + len(self.non_edges)

    @property
    def identity(self) -> MeklerElement:
        return MeklerElement((0,) * self.graph.n, (0,) * len(self.non_edges))

    def generator(self, v: int) -> MeklerElement:
        return MeklerElement(tuple(int(u == v) for u in range(self.graph.n)), (0,) * len(self.non_edges))

    def generators(self) -> List[MeklerElement]:
        return [self.generator(v) for v in range(self.graph.n)]

    def commutator_basis(self, index: int) -> MeklerElement:
        """(0, δ_index) for the index-th non-edge."""
        return MeklerElement((0,) * self.graph.n, tuple(int(k == index) for k in range(len(self.non_edges))))

    def element(self, a: Sequence[int], b: Sequence[int] = ()) -> MeklerElement:
        b = tuple(b) or (0,) * len(self.non_edges)
        if len(a) != self.graph.n or len(b) != len(self.non_edges):
            raise InputError(
                f"element needs {self.graph.n} vertex and {len(self.non_edges)} non-edge coordinates, "
                f"got {len(a)} and {len(b)}"
            )
        return MeklerElement(tuple(int(x) % self.p for x in a), tuple(int(y) % self.p for y in b))

    def elements(self) -> Iterator[MeklerElement]:
        vertex_part = list(itertools.product(range(self.p), repeat=self.graph.n))
        for a in vertex_part:
            for b in itertools.product(range(self.p), repeat=len(self.non_edges)):
                yield MeklerElement(a, b)


def mekler_group(graph: SimpleGraph, p: int = DEFAULT_PRIME, vertex_order: Sequence[int] = ()) -> MeklerGroup:
    return MeklerGroup(graph=graph, p=p, vertex_order=tuple(vertex_order))


def _conforms(group: MeklerGroup, x: MeklerElement) -> None:
    if len(x[0]) != group.graph.n or len(x[1]) != len(group.non_edges):
        raise InputError(f"element {x} does not conform to G({group.graph.name or 'graph'})")


def chi(group: MeklerGroup, a: Sequence[int], a_prime: Sequence[int]) -> Tuple[int, ...]:
    return tuple((a[t] * a_prime[s]) % group.p for s, t in group.non_edges)


def mekler_mul(group: MeklerGroup, x: MeklerElement, y: MeklerElement) -> MeklerElement:
    _conforms(group, x)
    _conforms(group, y)
    p = group.p
    a, b = x
    a2, b2 = y
    return MeklerElement(
        tuple((u + w) % p for u, w in zip(a, a2)),
        tuple((b[k] + b2[k] + a[t] * a2[s]) % p for k, (s, t) in enumerate(group.non_edges)),
    )


def mekler_inv(group: MeklerGroup, x: MeklerElement) -> MeklerElement:
    """(a, b)⁻¹ = (−a, −b + χ(a, a))."""
    _conforms(group, x)
    p = group.p
    a, b = x
    return MeklerElement(
        tuple((-u) % p for u in a),
        tuple((-b[k] + a[t] * a[s]) % p for k, (s, t) in enumerate(group.non_edges)),
    )


def mekler_order(group: MeklerGroup) -> int:
    """Exponent e with |G(Γ)| = p^e."""
    return group.order_exponent


def mekler_mul_batch(group: MeklerGroup, left: np.ndarray, right: np.ndarray) -> np.ndarray:
    """Row-wise products of stacked normal forms, each row [a | b]."""
    n = group.graph.n
    product = (left + right) % group.p
    if group.non_edges:
        s = np.array([st[0] for st in group.non_edges])
        t = np.array([st[1] for st in group.non_edges])
        product[:, n:] = (product[:, n:] + left[:, t] * right[:, s]) % group.p
    return product


def mekler_inv_batch(group: MeklerGroup, elements: np.ndarray) -> np.ndarray:
    """Row-wise inverses of stacked normal forms."""
    n = group.graph.n
    inverse = (-elements) % group.p
    if group.non_edges:
        s = np.array([st[0] for st in group.non_edges])
        t = np.array([st[1] for st in group.non_edges])
        inverse[:, n:] = (inverse[:, n:] + elements[:, t] * elements[:, s]) % group.p
    return inverse


def random_elements(group: MeklerGroup, rng: np.random.Generator, count: int) -> np.ndarray:
    return rng.integers(0, group.p, size=(count, group.order_exponent))


def as_fin_group(group: MeklerGroup, config: LabConfig | None = None, name: Optional[str] = None) -> FinGroup:
    """Law-backed FinGroup view; elements enumerate lazily."""
    config = config or default_config()
    order = group.p**group.order_exponent
    check_cap("semidirect_order", config.caps.semidirect_order, order)
    return FinGroup(
        name or f"G({group.graph.name or 'graph'})",
        identity=group.identity,
        law=lambda x, y: mekler_mul(group, x, y),
        inverse=lambda x: mekler_inv(group, x),
        generators=group.generators(),
        order=order,
        enumerate_fn=group.elements,
    )

"""
Isomorphism oracles: graphs by backtracking, Mekler groups by lifting graph maps,
by exhaustive GL(n, p) search on small graphs, and by fingerprints above that.
"""

from __future__ import annotations

import itertools
import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..common.config import LabConfig, default_config
from ..common.errors import ConsistencyFailure, InputError, NotAnIsomorphism, check_cap
from .fingerprint import GroupFingerprint, graph_fingerprint, rank_mod_p
from .graphs import SimpleGraph
from .group import DEFAULT_PRIME, MeklerElement, MeklerGroup, mekler_inv, mekler_mul

LOGGER = logging.getLogger(__name__)

Vector = Tuple[int, ...]


# ============================================================================
# graph isomorphism
# ============================================================================


def graph_iso(first: SimpleGraph, second: SimpleGraph, config: LabConfig | None = None) -> Optional[List[int]]:
    """A vertex bijection φ (first → second) preserving adjacency, or None."""
    config = config or default_config()
    limit = config.caps.graph_iso_vertices
    check_cap("graph_iso_vertices", limit, max(first.n, second.n))
    if first.n != second.n or len(first.edges) != len(second.edges):
        return None
    if first.degree_sequence() != second.degree_sequence():
        return None
    n = first.n
    source_degree = [first.degree(v) for v in range(n)]
    target_degree = [second.degree(v) for v in range(n)]
    mapping: List[int] = [-1] * n
    used = [False] * n

    def extend(v: int) -> bool:
        if v == n:
            return True
        for w in range(n):
            if used[w] or target_degree[w] != source_degree[v]:
                continue
            if any(first.adjacent(u, v) != second.adjacent(mapping[u], w) for u in range(v)):
                continue
            mapping[v], used[w] = w, True
            if extend(v + 1):
                return True
            mapping[v], used[w] = -1, False
        return False

    return list(mapping) if extend(0) else None


def is_graph_isomorphism(first: SimpleGraph, second: SimpleGraph, mapping: Sequence[int]) -> bool:
    if first.n != second.n or sorted(mapping) != list(range(first.n)):
        return False
    images = {(min(mapping[u], mapping[v]), max(mapping[u], mapping[v])) for u, v in first.edges}
    return images == set(second.edges)


# ============================================================================
# lifting graph maps to group maps
# ============================================================================


@dataclass
class GroupIsomorphism:
    """x_v ↦ x_{φ(v)} on G(Γ₁) → G(Γ₂), evaluated through re-collection.

    (a, b) = Π_v x_v^{a_v} · Π_k c_k^{b_k} (vertex order, then commutator basis), so its
    image is the same product of generator and commutator images taken in G(Γ₂).
    """

    source: MeklerGroup
    target: MeklerGroup
    mapping: Tuple[int, ...]
    commutator_images: Tuple[Vector, ...] = ()
    _memo: Dict[MeklerElement, MeklerElement] = field(default_factory=dict, repr=False)

    def __post_init__(self) -> None:
        target = self.target
        images = []
        for s, t in self.source.non_edges:
            y_s = target.generator(self.mapping[s])
            y_t = target.generator(self.mapping[t])
            # [y_t, y_s] = y_t⁻¹ y_s⁻¹ y_t y_s
            image = mekler_mul(
                target, mekler_mul(target, mekler_inv(target, y_t), mekler_inv(target, y_s)), mekler_mul(target, y_t, y_s)
            )
            if any(image.a):
                raise ConsistencyFailure(f"commutator image {image} is not central")
            images.append(image.b)
        self.commutator_images = tuple(images)

    def __call__(self, x: MeklerElement) -> MeklerElement:
        cached = self._memo.get(x)
        if cached is not None:
            return cached
        target = self.target
        result = target.identity
        for v in self.source.vertex_order:
            generator = target.generator(self.mapping[v])
            for _ in range(x.a[v]):
                result = mekler_mul(target, result, generator)
        b = list(result.b)
        for coefficient, image in zip(x.b, self.commutator_images):
            if coefficient:
                b = [(value + coefficient * delta) % target.p for value, delta in zip(b, image)]
        mapped = MeklerElement(result.a, tuple(b))
        self._memo[x] = mapped
        return mapped

    def is_bijective(self) -> bool:
        if not self.commutator_images:
            return True
        matrix = np.array([self.commutator_images], dtype=np.int64)
        return int(rank_mod_p(matrix, self.target.p)[0]) == len(self.target.non_edges)

    def check_products(self, pairs) -> Optional[Tuple[MeklerElement, MeklerElement]]:
        """First pair (x, y) with f(xy) ≠ f(x)f(y), if any."""
        for x, y in pairs:
            if self(mekler_mul(self.source, x, y)) != mekler_mul(self.target, self(x), self(y)):
                return x, y
        return None


def _random_element(group: MeklerGroup, rng: np.random.Generator) -> MeklerElement:
    values = rng.integers(0, group.p, size=group.order_exponent).tolist()
    return MeklerElement(tuple(values[: group.graph.n]), tuple(values[group.graph.n :]))


def induced_group_iso(
    mapping: Sequence[int],
    source: MeklerGroup,
    target: MeklerGroup,
    config: LabConfig | None = None,
    samples: int = 10_000,
) -> GroupIsomorphism:
    """Lift a graph isomorphism and verify the homomorphism law (exhaustive when small, else sampled)."""
    config = config or default_config()
    if source.p != target.p:
        raise InputError(f"primes differ: {source.p} and {target.p}")
    if not is_graph_isomorphism(source.graph, target.graph, mapping):
        raise NotAnIsomorphism(f"{list(mapping)} is not a graph isomorphism")
    lifted = GroupIsomorphism(source=source, target=target, mapping=tuple(mapping))
    if not lifted.is_bijective():
        raise ConsistencyFailure("lifted map is not bijective on the commutator subgroup")
    order = source.p**source.order_exponent
    if order * order <= samples:
        elements = list(source.elements())
        pairs = itertools.product(elements, repeat=2)
    else:
        rng = np.random.default_rng(config.seed)
        pairs = ((_random_element(source, rng), _random_element(source, rng)) for _ in range(samples))
    failure = lifted.check_products(pairs)
    if failure is not None:
        raise ConsistencyFailure(f"lifted map is not a homomorphism on {failure}")
    return lifted


# ============================================================================
# exact search over GL(n, p)
# ============================================================================


def _search_order(graph: SimpleGraph) -> List[int]:
    """Breadth-first vertex order, so each new column meets edge constraints early."""
    order: List[int] = []
    seen = set()
    for root in range(graph.n):
        if root in seen:
            continue
        seen.add(root)
        queue = deque([root])
        while queue:
            v = queue.popleft()
            order.append(v)
            for u in graph.neighbors(v):
                if u not in seen:
                    seen.add(u)
                    queue.append(u)
    return order


def exact_iso_witness(
    first: SimpleGraph,
    second: SimpleGraph,
    p: int = DEFAULT_PRIME,
    config: LabConfig | None = None,
) -> Optional[Dict[int, Vector]]:
    """S ∈ GL(n, p), as column images S e_v, with Λ²S(edges of first) = edges of second.

    The edge relations span coordinate subspaces of Λ²𝔽_p^n, so S e_u ∧ S e_v lies in
    the target span iff its non-edge coordinates vanish.
    """
    config = config or default_config()
    check_cap("exact_iso_vertices", config.caps.exact_iso_vertices, max(first.n, second.n))
    if first.n != second.n or len(first.edges) != len(second.edges):
        return None
    n = first.n
    vectors = [v for v in itertools.product(range(p), repeat=n) if any(v)]
    target_non_edges = second.non_edges()
    order = _search_order(first)
    constraints = [[u for u in order[:i] if first.adjacent(u, order[i])] for i in range(n)]
    columns: Dict[int, Vector] = {}
    visited = 0

    def wedge_in_target(u: Vector, v: Vector) -> bool:
        return all((u[s] * v[t] - u[t] * v[s]) % p == 0 for s, t in target_non_edges)

    def assign(i: int, span: frozenset) -> bool:
        nonlocal visited
        if i == n:
            return True
        vertex = order[i]
        for candidate in vectors:
            if candidate in span:
                continue
            visited += 1
            if not all(wedge_in_target(columns[u], candidate) for u in constraints[i]):
                continue
            columns[vertex] = candidate
            grown = frozenset(
                tuple((x + k * y) % p for x, y in zip(base, candidate)) for base in span for k in range(p)
            )
            if assign(i + 1, grown):
                return True
            del columns[vertex]
        return False

    found = assign(0, frozenset({(0,) * n}))
    LOGGER.debug("GL(%s, %s) search visited %s candidate column(s); found=%s.", n, p, visited, found)
    return dict(columns) if found else None


def exact_iso(first: SimpleGraph, second: SimpleGraph, p: int = DEFAULT_PRIME, config: LabConfig | None = None) -> bool:
    return exact_iso_witness(first, second, p, config) is not None


# ============================================================================
# reports
# ============================================================================


@dataclass(frozen=True)
class IsoReport:
    method: str
    graphs_isomorphic: bool
    groups_isomorphic: Optional[bool]
    fingerprints_equal: Optional[bool] = None
    collision: bool = False

    def as_dict(self) -> Dict:
        return {
            "method": self.method,
            "graphsIsomorphic": self.graphs_isomorphic,
            "groupsIsomorphic": self.groups_isomorphic,
            "fingerprintsEqual": self.fingerprints_equal,
            "fingerprintCollision": self.collision,
        }


def mekler_iso_report(
    first: SimpleGraph,
    second: SimpleGraph,
    p: int = DEFAULT_PRIME,
    config: LabConfig | None = None,
) -> IsoReport:
    """Exact search up to the exact_iso cap, fingerprints above it; collisions are flagged, never resolved."""
    config = config or default_config()
    graphs_isomorphic = graph_iso(first, second, config) is not None
    if first.n != second.n:
        # abelianizations 𝔽_p^n differ
        return IsoReport("abelianization", graphs_isomorphic, False)
    if first.n <= config.caps.exact_iso_vertices:
        return IsoReport("exact", graphs_isomorphic, exact_iso(first, second, p, config))
    equal = graph_fingerprint(first, p, config) == graph_fingerprint(second, p, config)
    if not equal:
        return IsoReport("fingerprint", graphs_isomorphic, False, fingerprints_equal=False)
    if graphs_isomorphic:
        return IsoReport("fingerprint", True, True, fingerprints_equal=True)
    LOGGER.warning("Fingerprints of non-isomorphic graphs %s and %s coincide; group isomorphism left open.", first, second)
    return IsoReport("fingerprint", False, None, fingerprints_equal=True, collision=True)


@dataclass(frozen=True)
class FingerprintCollision:
    """Two non-isomorphic graphs whose Mekler groups share a fingerprint."""

    first: SimpleGraph
    second: SimpleGraph
    fingerprint: GroupFingerprint

    def as_dict(self) -> Dict:
        return {
            "first": self.first.as_dict(),
            "second": self.second.as_dict(),
            "fingerprint": self.fingerprint.as_dict(),
        }


def fingerprint_collisions(
    graphs: Sequence[SimpleGraph],
    p: int = DEFAULT_PRIME,
    config: LabConfig | None = None,
) -> List[FingerprintCollision]:
    """Every pair of non-isomorphic graphs with equal fingerprints, in input order."""
    config = config or default_config()
    prints = [graph_fingerprint(graph, p, config) for graph in graphs]
    collisions = []
    for i, j in itertools.combinations(range(len(graphs)), 2):
        if prints[i] == prints[j] and graph_iso(graphs[i], graphs[j], config) is None:
            collisions.append(FingerprintCollision(graphs[i], graphs[j], prints[i]))
    for collision in collisions:
        LOGGER.warning("Fingerprint collision between non-isomorphic graphs %s and %s.", collision.first, collision.second)
    return collisions

"""
Finite groups given by a Cayley table or by a multiplication law on hashable labels.

Elements are addressed by label throughout. Law-backed groups enumerate lazily, so a
direct product can be described (and handled factor by factor) even when listing its
elements would exceed the configured order cap.
"""

from __future__ import annotations

import itertools
import logging
import random
from collections import deque
from typing import Callable, Dict, Hashable, Iterable, List, Optional, Sequence, Set, Tuple

from ..common.errors import InputError, check_cap

LOGGER = logging.getLogger(__name__)

Label = Hashable
Law = Callable[[Label, Label], Label]

# exhaustive associativity check up to this order, sampled above
EXHAUSTIVE_LAW_ORDER = 64


class FinGroup:
    """A finite group: ``elements``, ``mul``, ``identity`` and ``inv`` over labels."""

    def __init__(
        self,
        name: str,
        *,
        identity: Label,
        law: Law,
        elements: Optional[Sequence[Label]] = None,
        generators: Optional[Sequence[Label]] = None,
        inverse: Optional[Callable[[Label], Label]] = None,
        order: Optional[int] = None,
        factors: Tuple["FinGroup", ...] = (),
        enumerate_fn: Optional[Callable[[], Iterable[Label]]] = None,
    ) -> None:
        self.name = name
        self.identity = identity
        self._law = law
        self._inverse = inverse
        self._elements: Optional[Tuple[Label, ...]] = tuple(elements) if elements is not None else None
        self._generators = tuple(generators) if generators is not None else None
        self._order = order if order is not None else (len(self._elements) if self._elements is not None else None)
        self._enumerate_fn = enumerate_fn
        self._index: Optional[Dict[Label, int]] = None
        self._inverse_cache: Dict[Label, Label] = {}
        self.factors = factors

    def __repr__(self) -> str:
        return f"FinGroup({self.name!r}, order={self.order})"

    # -- structure -----------------------------------------------------------------

    @property
    def order(self) -> int:
        if self._order is None:
            self._order = len(self.elements)
        return self._order

    @property
    def elements(self) -> Tuple[Label, ...]:
        if self._elements is None:
            if self._enumerate_fn is not None:
                self._elements = tuple(self._enumerate_fn())
            elif self._generators is not None:
                self._elements = tuple(_closure(self._law, self.identity, self._generators))
            else:
                raise InputError(f"group {self.name} has neither elements nor generators")
            self._order = len(self._elements)
        return self._elements

    def ensure_enumerable(self, limit: int) -> Tuple[Label, ...]:
        check_cap("group_order", limit, self.order)
        return self.elements

    def index(self, label: Label) -> int:
        if self._index is None:
            self._index = {element: position for position, element in enumerate(self.elements)}
        try:
            return self._index[label]
        except KeyError as exc:
            raise InputError(f"{label!r} is not an element of {self.name}") from exc

    def __contains__(self, label: Label) -> bool:
        try:
            self.index(label)
        except (InputError, TypeError):
            return False
        return True

    @property
    def generators(self) -> Tuple[Label, ...]:
        if self._generators is None:
            self._generators = tuple(greedy_generating_set(self))
        return self._generators

    # -- arithmetic ------------------------------------------------------------------

    def mul(self, a: Label, b: Label) -> Label:
        return self._law(a, b)

    def inv(self, a: Label) -> Label:
        if self._inverse is not None:
            return self._inverse(a)
        cached = self._inverse_cache.get(a)
        if cached is not None:
            return cached
        previous, current = self.identity, a
        while current != self.identity:
            previous, current = current, self._law(current, a)
        self._inverse_cache[a] = previous
        return previous

    def conj(self, h: Label, g: Label) -> Label:
        """h g h⁻¹."""
        return self.mul(self.mul(h, g), self.inv(h))

    def commutator(self, a: Label, b: Label) -> Label:
        """a⁻¹ b⁻¹ a b."""
        return self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))

    def power(self, a: Label, k: int) -> Label:
        if k < 0:
            return self.power(self.inv(a), -k)
        result = self.identity
        for _ in range(k):
            result = self.mul(result, a)
        return result

    def element_order(self, a: Label) -> int:
        count, current = 1, a
        while current != self.identity:
            current = self.mul(current, a)
            count += 1
        return count

    def is_abelian(self) -> bool:
        gens = self.generators
        return all(self.mul(a, b) == self.mul(b, a) for a in gens for b in gens)

    def cayley_table(self) -> List[List[int]]:
        elements = self.elements
        return [[self.index(self.mul(a, b)) for b in elements] for a in elements]


def _closure(law: Law, identity: Label, generators: Iterable[Label], limit: Optional[int] = None) -> List[Label]:
    """Breadth-first closure of ``generators`` under right multiplication."""
    gens = [g for g in generators]
    seen: Set[Label] = {identity}
    ordered: List[Label] = [identity]
    queue = deque([identity])
    while queue:
        current = queue.popleft()
        for g in gens:
            product = law(current, g)
            if product not in seen:
                seen.add(product)
                ordered.append(product)
                queue.append(product)
                if limit is not None:
                    check_cap("group_order", limit, len(ordered))
    return ordered


# ============================================================================
# constructors
# ============================================================================


def from_table(name: str, labels: Sequence[Label], table: Sequence[Sequence[int]]) -> FinGroup:
    """Validate a Cayley table (indices into ``labels``) and wrap it as a FinGroup."""
    n = len(labels)
    if n == 0:
        raise InputError("group must have at least one element")
    if len(set(labels)) != n:
        raise InputError("group element labels must be distinct")
    if len(table) != n or any(len(row) != n for row in table):
        raise InputError(f"Cayley table must be {n}x{n}")
    for row in table:
        for entry in row:
            if isinstance(entry, bool) or not isinstance(entry, int) or not 0 <= entry < n:
                raise InputError(f"Cayley table entry {entry!r} is not an element index")
    for row in table:
        if len(set(row)) != n:
            raise InputError("Cayley table rows must be permutations (Latin square)")
    for column in range(n):
        if len({table[row][column] for row in range(n)}) != n:
            raise InputError("Cayley table columns must be permutations (Latin square)")
    identities = [e for e in range(n) if all(table[e][x] == x and table[x][e] == x for x in range(n))]
    if not identities:
        raise InputError("Cayley table has no identity element")
    identity = identities[0]
    inverse_index = {a: next(b for b in range(n) if table[a][b] == identity) for a in range(n)}
    position = {label: i for i, label in enumerate(labels)}

    def law(a: Label, b: Label) -> Label:
        return labels[table[position[a]][position[b]]]

    def inverse(a: Label) -> Label:
        return labels[inverse_index[position[a]]]

    group = FinGroup(name, identity=labels[identity], law=law, elements=list(labels), inverse=inverse)
    check_group_laws(group)
    return group


def from_generators(
    name: str,
    generators: Sequence[Label],
    law: Law,
    identity: Label,
    *,
    inverse: Optional[Callable[[Label], Label]] = None,
    limit: Optional[int] = None,
) -> FinGroup:
    """Subgroup generated by ``generators`` under ``law``, enumerated by closure."""
    elements = _closure(law, identity, generators, limit)
    LOGGER.debug("Closure of %s generator(s) for %s has %s elements.", len(generators), name, len(elements))
    return FinGroup(name, identity=identity, law=law, elements=elements, generators=generators, inverse=inverse)


def compose(p: Tuple[int, ...], q: Tuple[int, ...]) -> Tuple[int, ...]:
    """(p·q)(i) = p(q(i)): apply q first."""
    return tuple(p[i] for i in q)


def invert_permutation(p: Tuple[int, ...]) -> Tuple[int, ...]:
    result = [0] * len(p)
    for i, image in enumerate(p):
        result[image] = i
    return tuple(result)


def from_permutations(name: str, generators: Sequence[Sequence[int]], degree: Optional[int] = None) -> FinGroup:
    gens = [tuple(g) for g in generators]
    if degree is None:
        degree = len(gens[0]) if gens else 1
    for g in gens:
        if sorted(g) != list(range(degree)):
            raise InputError(f"{g} is not a permutation of {degree} points")
    identity = tuple(range(degree))
    return from_generators(name, gens, compose, identity, inverse=invert_permutation)


def cyclic(n: int) -> FinGroup:
    if n < 1:
        raise InputError(f"cyclic group order must be positive, got {n}")
    return FinGroup(
        f"Z{n}",
        identity=0,
        law=lambda a, b: (a + b) % n,
        elements=list(range(n)),
        generators=[1 % n],
        inverse=lambda a: (-a) % n,
    )


def symmetric(n: int) -> FinGroup:
    if n <= 1:
        return from_permutations(f"S{n}", [], degree=max(n, 1))
    transposition = (1, 0) + tuple(range(2, n))
    cycle = tuple(range(1, n)) + (0,)
    return from_permutations(f"S{n}", [transposition, cycle])


def alternating(n: int) -> FinGroup:
    if n <= 2:
        return from_permutations(f"A{n}", [], degree=max(n, 1))
    # 3-cycles (0 1 k) generate A_n
    gens = []
    for k in range(2, n):
        image = list(range(n))
        image[0], image[1], image[k] = 1, k, 0
        gens.append(tuple(image))
    return from_permutations(f"A{n}", gens)


def dihedral(n: int) -> FinGroup:
    """Symmetries of the n-gon, order 2n."""
    if n < 3:
        raise InputError(f"dihedral group needs n >= 3, got {n}")
    rotation = tuple((i + 1) % n for i in range(n))
    reflection = tuple((-i) % n for i in range(n))
    return from_permutations(f"D{n}", [rotation, reflection])


_QUATERNION_UNITS = ("1", "i", "j", "k")
_QUATERNION_PRODUCTS = {
    ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
    ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
    ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
    ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
}


def quaternion() -> FinGroup:
    """Q8 with labels '1', '-1', 'i', '-i', …"""

    def split(label: str) -> Tuple[int, str]:
        return (-1, label[1:]) if label.startswith("-") else (1, label)

    def law(a: str, b: str) -> str:
        sa, ua = split(a)
        sb, ub = split(b)
        sign, unit = _QUATERNION_PRODUCTS[(ua, ub)]
        return unit if sa * sb * sign == 1 else "-" + unit

    elements = [sign + unit for unit in _QUATERNION_UNITS for sign in ("", "-")]
    return FinGroup("Q8", identity="1", law=law, elements=elements, generators=["i", "j"])


def direct_product(*groups: FinGroup) -> FinGroup:
    """Cartesian product with componentwise law; elements are tuples."""
    if not groups:
        return cyclic(1)
    parts = tuple(groups)

    def law(a: Tuple, b: Tuple) -> Tuple:
        return tuple(g.mul(x, y) for g, x, y in zip(parts, a, b))

    def inverse(a: Tuple) -> Tuple:
        return tuple(g.inv(x) for g, x in zip(parts, a))

    identity = tuple(g.identity for g in parts)
    generators = []
    for position, group in enumerate(parts):
        for gen in group.generators:
            element = list(identity)
            element[position] = gen
            generators.append(tuple(element))
    order = 1
    for group in parts:
        order *= group.order
    return FinGroup(
        "x".join(g.name for g in parts),
        identity=identity,
        law=law,
        generators=generators,
        inverse=inverse,
        order=order,
        factors=parts,
        enumerate_fn=lambda: itertools.product(*(g.elements for g in parts)),
    )


# ============================================================================
# structure
# ============================================================================


def check_group_laws(group: FinGroup, *, samples: int = 10_000, seed: int = 0) -> None:
    """Associativity, identity and inverse laws; exhaustive up to order 64, sampled above."""
    elements = group.elements
    e = group.identity
    for a in elements:
        if group.mul(a, e) != a or group.mul(e, a) != a:
            raise InputError(f"{e!r} is not an identity for {a!r} in {group.name}")
        if group.mul(a, group.inv(a)) != e:
            raise InputError(f"inverse law fails for {a!r} in {group.name}")
    if len(elements) <= EXHAUSTIVE_LAW_ORDER:
        triples: Iterable[Tuple[Label, Label, Label]] = itertools.product(elements, repeat=3)
    else:
        rng = random.Random(seed)
        triples = ((rng.choice(elements), rng.choice(elements), rng.choice(elements)) for _ in range(samples))
    for a, b, c in triples:
        if group.mul(group.mul(a, b), c) != group.mul(a, group.mul(b, c)):
            raise InputError(f"associativity fails on ({a!r}, {b!r}, {c!r}) in {group.name}")


def subgroup_closure(group: FinGroup, generators: Iterable[Label]) -> Set[Label]:
    return set(_closure(group.mul, group.identity, list(generators)))


def normal_closure(group: FinGroup, subset: Iterable[Label]) -> Set[Label]:
    """Smallest normal subgroup containing ``subset`` (closure under conjugation by generators)."""
    gens = list(dict.fromkeys(subset))
    closed = subgroup_closure(group, gens)
    pending = deque(gens)
    while pending:
        h = pending.popleft()
        for s in group.generators:
            for conjugator in (s, group.inv(s)):
                image = group.conj(conjugator, h)
                if image not in closed:
                    gens.append(image)
                    pending.append(image)
                    closed = subgroup_closure(group, gens)
    return closed


def commutator_subgroup(group: FinGroup) -> Set[Label]:
    gens = group.generators
    return normal_closure(group, [group.commutator(a, b) for a in gens for b in gens])


def conjugacy_classes(group: FinGroup) -> List[List[Label]]:
    remaining = list(group.elements)
    assigned: Set[Label] = set()
    classes: List[List[Label]] = []
    for g in remaining:
        if g in assigned:
            continue
        orbit = list(dict.fromkeys(group.conj(h, g) for h in group.elements))
        assigned.update(orbit)
        classes.append(orbit)
    return classes


def centralizer(group: FinGroup, subset: Iterable[Label], candidates: Optional[Iterable[Label]] = None) -> List[Label]:
    """Elements (of ``candidates``, default the whole group) commuting with every element of ``subset``."""
    targets = list(subset)
    pool = group.elements if candidates is None else candidates
    return [g for g in pool if all(group.mul(g, d) == group.mul(d, g) for d in targets)]


def group_center(group: FinGroup) -> List[Label]:
    return centralizer(group, group.generators)


def greedy_generating_set(group: FinGroup) -> List[Label]:
    chosen: List[Label] = []
    span: Set[Label] = {group.identity}
    for g in group.elements:
        if g not in span:
            chosen.append(g)
            span = set(_closure(group.mul, group.identity, chosen))
            if len(span) == group.order:
                break
    return chosen


def all_subgroups(group: FinGroup) -> List[frozenset]:
    """Every subgroup, by repeatedly adjoining single elements (small groups only)."""
    found = {frozenset({group.identity})}
    frontier = list(found)
    while frontier:
        fresh = []
        for subgroup in frontier:
            for g in group.elements:
                if g in subgroup:
                    continue
                bigger = frozenset(subgroup_closure(group, list(subgroup) + [g]))
                if bigger not in found:
                    found.add(bigger)
                    fresh.append(bigger)
        frontier = fresh
    return sorted(found, key=lambda s: (len(s), sorted(group.index(x) for x in s)))


_NAMED = {
    "Z": cyclic,
    "S": symmetric,
    "A": alternating,
    "D": dihedral,
}

TABLE_GROUPS = (
    "Z1", "Z2", "Z3", "Z4", "Z5", "Z6", "Z7", "Z8",
    "Z2xZ2", "Z2xZ4", "Z2xZ2xZ2", "S3", "D4", "Q8", "A4", "S4", "A5",
)


def group_by_name(name: str) -> FinGroup:
    """Parse 'Z4', 'S3', 'D4', 'Q8', 'A5' and products such as 'A5xZ2'."""
    tokens = [token.strip() for token in name.split("x")]
    if not tokens or any(not token for token in tokens):
        raise InputError(f"cannot parse group name {name!r}")
    groups = []
    for token in tokens:
        if token == "Q8":
            groups.append(quaternion())
            continue
        builder = _NAMED.get(token[0])
        if builder is None or not token[1:].isdigit():
            raise InputError(f"unknown group {token!r} (expected Z<n>, S<n>, A<n>, D<n> or Q8)")
        groups.append(builder(int(token[1:])))
    group = groups[0] if len(groups) == 1 else direct_product(*groups)
    group.name = name
    return group

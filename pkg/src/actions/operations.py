"""
Validation and orbit structure of finite measure-preserving actions.

On a finite space every atom has positive mass, so "almost everywhere" statements
become pointwise ones: an action is free when no non-identity element fixes an atom,
and ergodic when it has a single orbit (invariant sets are exactly unions of orbits).
"""

from __future__ import annotations

import logging
from fractions import Fraction
from typing import Dict, Hashable, List, Mapping, Optional, Sequence, Tuple

from ..common.config import LabConfig, default_config
from ..common.errors import HomomorphismFailure, InputError, NotMeasurePreserving, check_cap
from ..common.numbers import Weight
from .groups import FinGroup, Label, compose
from .models import ActionReport, FiniteAction, FiniteProbSpace, OrbitSignature, Permutation

LOGGER = logging.getLogger(__name__)

# brute-force orbit equivalence tries every weight-preserving bijection
BRUTE_FORCE_ATOMS = 8


class _UnionFind:
    def __init__(self, size: int) -> None:
        self.parent = list(range(size))
        self.rank = [0] * size

    def find(self, x: int) -> int:
        root = self.parent[x]
        if self.parent[root] != root:
            root = self.parent[x] = self.find(root)
        return root

    def union(self, x: int, y: int) -> None:
        x, y = self.find(x), self.find(y)
        if x == y:
            return
        if self.rank[x] < self.rank[y]:
            x, y = y, x
        elif self.rank[x] == self.rank[y]:
            self.rank[x] += 1
        self.parent[y] = x


def _weights_equal(a: Weight, b: Weight, tol: float) -> bool:
    if isinstance(a, Fraction) and isinstance(b, Fraction):
        return a == b
    return abs(float(a) - float(b)) <= tol


def _as_permutation(space: FiniteProbSpace, images: object, g: Label) -> Permutation:
    if isinstance(images, Mapping):
        ordered = [images.get(atom, images.get(str(atom))) for atom in space.atoms]
    else:
        ordered = list(images)  # type: ignore[arg-type]
    if len(ordered) != space.size:
        raise InputError(f"perm({g!r}) must list {space.size} images")
    lookup = {atom: i for i, atom in enumerate(space.atoms)}
    lookup_text = {str(atom): i for i, atom in enumerate(space.atoms)}
    indices = []
    for image in ordered:
        if image in lookup:
            indices.append(lookup[image])
        elif str(image) in lookup_text:
            indices.append(lookup_text[str(image)])
        else:
            raise InputError(f"perm({g!r}) sends an atom to unknown atom {image!r}")
    if len(set(indices)) != space.size:
        raise InputError(f"perm({g!r}) is not a bijection of the atoms")
    return tuple(indices)


def make_action(
    group: FinGroup,
    space: FiniteProbSpace,
    perm: Mapping[Label, object],
    config: LabConfig | None = None,
    *,
    name: str = "",
) -> FiniteAction:
    """Validate homomorphism and measure preservation, with a witness on failure."""
    config = config or default_config()
    elements = group.ensure_enumerable(config.caps.group_order)
    text_keys = {str(key): value for key, value in perm.items()}
    table: Dict[Label, Permutation] = {}
    for g in elements:
        if g in perm:
            images = perm[g]
        elif str(g) in text_keys:
            images = text_keys[str(g)]
        else:
            raise InputError(f"perm is missing group element {g!r}")
        table[g] = _as_permutation(space, images, g)

    for g in elements:
        for h in elements:
            if compose(table[g], table[h]) != table[group.mul(g, h)]:
                raise HomomorphismFailure(g, h)
    for g in elements:
        for i, j in enumerate(table[g]):
            if not _weights_equal(space.weights[i], space.weights[j], config.tol):
                raise NotMeasurePreserving(g, space.atoms[i])
    LOGGER.debug("Validated action %s: |G|=%s on %s atoms.", name or group.name, len(elements), space.size)
    return FiniteAction(group=group, space=space, perm=table, name=name or group.name)


def orbits(action: FiniteAction) -> Tuple[Tuple[int, ...], ...]:
    """Orbit partition, each orbit sorted, orbits ordered by smallest atom index."""
    finder = _UnionFind(action.space.size)
    for g in action.group.generators:
        for x, y in enumerate(action.perm[g]):
            finder.union(x, y)
    grouped: Dict[int, List[int]] = {}
    for x in range(action.space.size):
        grouped.setdefault(finder.find(x), []).append(x)
    return tuple(sorted((tuple(members) for members in grouped.values()), key=lambda orbit: orbit[0]))


def orbit_signature(action: FiniteAction) -> OrbitSignature:
    weights = action.space.weights
    return OrbitSignature.from_orbits([[weights[i] for i in orbit] for orbit in orbits(action)])


def is_free(action: FiniteAction) -> bool:
    identity = action.group.identity
    for g, permutation in action.perm.items():
        if g == identity:
            continue
        if any(permutation[i] == i for i in range(len(permutation))):
            return False
    return True


def action_report(action: FiniteAction) -> ActionReport:
    partition = orbits(action)
    return ActionReport(
        is_free=is_free(action),
        is_ergodic=len(partition) == 1,
        orbits=partition,
        signature=orbit_signature(action),
    )


def orbit_equivalent(first: FiniteAction, second: FiniteAction) -> bool:
    """Equal orbit signatures: a measure-preserving bijection must match orbits to orbits."""
    return orbit_signature(first) == orbit_signature(second)


def orbit_equivalent_bruteforce(first: FiniteAction, second: FiniteAction, tol: float = 1e-9) -> bool:
    """Search every weight-preserving bijection θ with x ~ x' ⟺ θx ~ θx'."""
    n = first.space.size
    if n != second.space.size:
        return False
    check_cap("brute_force_atoms", BRUTE_FORCE_ATOMS, n)
    label_a = _orbit_labels(first)
    label_b = _orbit_labels(second)
    wa, wb = first.space.weights, second.space.weights
    theta: List[int] = []
    used = [False] * n

    def extend(x: int) -> bool:
        if x == n:
            return True
        for y in range(n):
            if used[y] or not _weights_equal(wa[x], wb[y], tol):
                continue
            if any((label_a[x] == label_a[p]) != (label_b[y] == label_b[theta[p]]) for p in range(x)):
                continue
            used[y] = True
            theta.append(y)
            if extend(x + 1):
                return True
            theta.pop()
            used[y] = False
        return False

    return extend(0)


def _orbit_labels(action: FiniteAction) -> List[int]:
    labels = [0] * action.space.size
    for position, orbit in enumerate(orbits(action)):
        for x in orbit:
            labels[x] = position
    return labels


# ============================================================================
# builders
# ============================================================================


def coset_action(group: FinGroup, subgroup: Sequence[Label], config: LabConfig | None = None) -> FiniteAction:
    """G acting on the left cosets gH, uniform weights."""
    config = config or default_config()
    elements = group.ensure_enumerable(config.caps.group_order)
    members = set(subgroup)
    if group.identity not in members:
        raise InputError("subgroup must contain the identity")
    cosets: List[frozenset] = []
    owner: Dict[Label, int] = {}
    for g in elements:
        if g in owner:
            continue
        coset = frozenset(group.mul(g, h) for h in members)
        for x in coset:
            owner[x] = len(cosets)
        cosets.append(coset)
    if len(cosets) * len(members) != len(elements):
        raise InputError("given elements do not form a subgroup")
    representatives = [min(coset, key=group.index) for coset in cosets]
    space = FiniteProbSpace.uniform([f"{group.index(r)}H" for r in representatives])
    perm = {g: tuple(owner[group.mul(g, r)] for r in representatives) for g in elements}
    name = f"{group.name}/<{','.join(str(i) for i in sorted(group.index(h) for h in members))}>"
    return make_action(group, space, {g: [space.atoms[i] for i in images] for g, images in perm.items()}, config, name=name)


def regular_action(group: FinGroup, config: LabConfig | None = None) -> FiniteAction:
    action = coset_action(group, [group.identity], config)
    return FiniteAction(group=action.group, space=action.space, perm=action.perm, name=f"{group.name} regular")


def trivial_action(group: FinGroup, space: FiniteProbSpace, config: LabConfig | None = None) -> FiniteAction:
    config = config or default_config()
    identity = tuple(range(space.size))
    elements = group.ensure_enumerable(config.caps.group_order)
    return make_action(group, space, {g: [space.atoms[i] for i in identity] for g in elements}, config, name=f"{group.name} trivial")


def disjoint_union(
    parts: Sequence[FiniteAction],
    masses: Optional[Sequence[Weight]] = None,
    config: LabConfig | None = None,
) -> FiniteAction:
    """Run the same group on the disjoint union, scaling each part's weights by its mass."""
    config = config or default_config()
    if not parts:
        raise InputError("disjoint union needs at least one action")
    group = parts[0].group
    if any(part.group is not group for part in parts):
        raise InputError("disjoint union needs every part to use the same group object")
    if masses is None:
        total = sum(part.space.size for part in parts)
        masses = [Fraction(part.space.size, total) for part in parts]
    if len(masses) != len(parts):
        raise InputError("one mass per part is required")
    atoms: List[Hashable] = []
    weights: List[Weight] = []
    offsets = []
    for position, (part, mass) in enumerate(zip(parts, masses)):
        offsets.append(len(atoms))
        atoms.extend(f"{position}:{atom}" for atom in part.space.atoms)
        weights.extend(mass * w for w in part.space.weights)
    space = FiniteProbSpace.build(atoms, weights, config.tol)
    perm = {}
    for g in group.elements:
        images: List[Hashable] = []
        for part, offset in zip(parts, offsets):
            images.extend(atoms[offset + j] for j in part.perm[g])
        perm[g] = images
    name = " + ".join(part.name for part in parts)
    return make_action(group, space, perm, config, name=name)


def action_from_permutation_images(
    group: FinGroup,
    space: FiniteProbSpace,
    images: Mapping[Label, Permutation],
    config: LabConfig | None = None,
    name: str = "",
) -> FiniteAction:
    """make_action for index-valued permutations."""
    return make_action(group, space, {g: [space.atoms[i] for i in perm] for g, perm in images.items()}, config, name=name)

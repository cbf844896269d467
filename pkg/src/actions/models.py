"""Dataclasses for finite measure-preserving actions."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Hashable, List, Sequence, Tuple

from ..common.errors import InputError
from ..common.numbers import Weight, normalize_weights, signature_key, weights_sum_to_one
from .groups import FinGroup, Label

Permutation = Tuple[int, ...]


def _weight_text(weight: Weight) -> str:
    if isinstance(weight, Fraction):
        return str(weight)
    return repr(round(float(weight), 12))


@dataclass(frozen=True)
class FiniteProbSpace:
    """Atoms with strictly positive weights summing to 1."""

    atoms: Tuple[Hashable, ...]
    weights: Tuple[Weight, ...]

    @classmethod
    def build(cls, atoms: Sequence[Hashable], weights: Sequence[object], tol: float = 1e-9) -> "FiniteProbSpace":
        atoms = tuple(atoms)
        if not atoms:
            raise InputError("probability space needs at least one atom")
        if len(set(atoms)) != len(atoms):
            raise InputError("atom labels must be distinct")
        parsed = normalize_weights(weights)
        if len(parsed) != len(atoms):
            raise InputError(f"{len(atoms)} atoms but {len(parsed)} weights")
        for atom, weight in zip(atoms, parsed):
            if weight <= 0:
                raise InputError(f"atom {atom!r} has non-positive weight {weight}")
        if not weights_sum_to_one(parsed, tol):
            raise InputError(f"weights must sum to 1, got {float(sum(parsed)):.12g}")
        return cls(atoms=atoms, weights=tuple(parsed))

    @classmethod
    def uniform(cls, atoms: Sequence[Hashable]) -> "FiniteProbSpace":
        atoms = tuple(atoms)
        return cls.build(atoms, [Fraction(1, len(atoms))] * len(atoms))

    @property
    def size(self) -> int:
        return len(self.atoms)

    @property
    def is_exact(self) -> bool:
        return all(isinstance(w, Fraction) for w in self.weights)

    def index(self, atom: Hashable) -> int:
        try:
            return self.atoms.index(atom)
        except ValueError as exc:
            raise InputError(f"{atom!r} is not an atom of the space") from exc


@dataclass(frozen=True)
class OrbitSignature:
    """Multiset of orbit descriptors, each the sorted atom weights of one orbit."""

    descriptors: Tuple[Tuple[Weight, ...], ...]

    @classmethod
    def from_orbits(cls, orbit_weights: Sequence[Sequence[Weight]]) -> "OrbitSignature":
        keyed = [tuple(sorted(signature_key(w) for w in orbit)) for orbit in orbit_weights]
        return cls(descriptors=tuple(sorted(keyed, key=lambda d: (len(d), d))))

    @property
    def total(self) -> Weight:
        return sum(sum(descriptor) for descriptor in self.descriptors)

    def as_list(self) -> List[List[str]]:
        return [[_weight_text(w) for w in descriptor] for descriptor in self.descriptors]


@dataclass(frozen=True)
class FiniteAction:
    """A finite group acting by measure-preserving permutations of atom indices.

    ``perm[g][i]`` is the index of g·atoms[i].
    """

    group: FinGroup = field(compare=False)
    space: FiniteProbSpace
    perm: Dict[Label, Permutation] = field(compare=False)
    name: str = ""

    def act(self, g: Label, atom_index: int) -> int:
        return self.perm[g][atom_index]


@dataclass(frozen=True)
class ActionReport:
    is_free: bool
    is_ergodic: bool
    orbits: Tuple[Tuple[int, ...], ...]
    signature: OrbitSignature

    def as_dict(self, space: FiniteProbSpace | None = None) -> Dict:
        orbits = [list(orbit) for orbit in self.orbits]
        if space is not None:
            orbits = [[str(space.atoms[i]) for i in orbit] for orbit in self.orbits]
        return {
            "isFree": self.is_free,
            "isErgodic": self.is_ergodic,
            "orbits": orbits,
            "signature": self.signature.as_list(),
        }

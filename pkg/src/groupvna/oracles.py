"""
Multiplication oracles for the infinite groups: free groups, lattices, SL(n,ℤ) and
direct products. Every element is kept in a hashable normal form.
"""

from __future__ import annotations

import logging
from abc import ABC, abstractmethod
from functools import lru_cache
from typing import Hashable, List, Sequence, Tuple

import sympy

from ..actions.families import MATRIX_A, MATRIX_B
from ..common.errors import InputError

LOGGER = logging.getLogger(__name__)

Element = Hashable
IntMatrix = Tuple[Tuple[int, ...], ...]

SL3Z_GENERATOR_NOTE = "SL(3,Z) generated by the six elementary matrices E_ij(+1), i != j, with their inverses E_ij(-1)"


class GroupOracle(ABC):
    """A finitely generated group known only through its multiplication."""

    name: str = "group"
    note: str = ""

    @property
    @abstractmethod
    def identity(self) -> Element: ...

    @property
    @abstractmethod
    def generators(self) -> Tuple[Element, ...]: ...

    @abstractmethod
    def mul(self, a: Element, b: Element) -> Element: ...

    @abstractmethod
    def inv(self, a: Element) -> Element: ...

    def normal_form(self, a: Element) -> Element:
        """Elements are stored normalized, so this is the identity map by default."""
        return a

    def symmetric_generators(self) -> Tuple[Element, ...]:
        """Generators followed by their inverses, duplicates removed, order kept."""
        seen = dict.fromkeys(self.generators)
        for g in self.generators:
            seen.setdefault(self.inv(g))
        return tuple(seen)

    def conj(self, h: Element, g: Element) -> Element:
        return self.mul(self.mul(h, g), self.inv(h))

    def is_abelian(self) -> bool:
        gens = self.generators
        return all(self.mul(a, b) == self.mul(b, a) for a in gens for b in gens)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.name!r})"


class FreeGroup(GroupOracle):
    """F_n on letters ±1..±n; elements are freely reduced words."""

    def __init__(self, rank: int) -> None:
        if rank < 1:
            raise InputError(f"free group rank must be positive, got {rank}")
        self.rank = rank
        self.name = f"F{rank}"

    @property
    def identity(self) -> Tuple[int, ...]:
        return ()

    @property
    def generators(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple((letter,) for letter in range(1, self.rank + 1))

    def mul(self, a: Tuple[int, ...], b: Tuple[int, ...]) -> Tuple[int, ...]:
        word = list(a)
        for letter in b:
            if word and word[-1] == -letter:
                word.pop()
            else:
                word.append(letter)
        return tuple(word)

    def inv(self, a: Tuple[int, ...]) -> Tuple[int, ...]:
        return tuple(-letter for letter in reversed(a))


class LatticeGroup(GroupOracle):
    """ℤ^d with the unit vectors as generators."""

    def __init__(self, rank: int) -> None:
        if rank < 1:
            raise InputError(f"lattice rank must be positive, got {rank}")
        self.rank = rank
        self.name = f"Z{rank}"

    @property
    def identity(self) -> Tuple[int, ...]:
        return (0,) * self.rank

    @property
    def generators(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(tuple(int(i == j) for j in range(self.rank)) for i in range(self.rank))

    def mul(self, a: Tuple[int, ...], b: Tuple[int, ...]) -> Tuple[int, ...]:
        return tuple(x + y for x, y in zip(a, b))

    def inv(self, a: Tuple[int, ...]) -> Tuple[int, ...]:
        return tuple(-x for x in a)


def _as_int_matrix(rows: Sequence[Sequence[int]]) -> IntMatrix:
    try:
        matrix = tuple(tuple(int(entry) for entry in row) for row in rows)
    except (TypeError, ValueError) as exc:
        raise InputError(f"matrix entries must be integers, got {rows!r}") from exc
    size = len(matrix)
    if size == 0 or any(len(row) != size for row in matrix):
        raise InputError(f"expected a square integer matrix, got {rows!r}")
    return matrix


@lru_cache(maxsize=65_536)
def _integer_inverse(matrix: IntMatrix) -> IntMatrix:
    inverse = sympy.Matrix(matrix).adjugate()
    return tuple(tuple(int(inverse[i, j]) for j in range(len(matrix))) for i in range(len(matrix)))


class MatrixGroup(GroupOracle):
    """A subgroup of SL(n,ℤ) given by integer generator matrices; exact Python integers."""

    def __init__(self, name: str, generators: Sequence[Sequence[Sequence[int]]], note: str = "") -> None:
        matrices = [_as_int_matrix(g) for g in generators]
        if not matrices:
            raise InputError(f"{name}: at least one generator is required")
        sizes = {len(m) for m in matrices}
        if len(sizes) != 1:
            raise InputError(f"{name}: generators have different sizes {sorted(sizes)}")
        for matrix in matrices:
            if sympy.Matrix(matrix).det() != 1:
                raise InputError(f"{name}: generator {matrix} does not have determinant 1")
        self.name = name
        self.note = note
        self.size = sizes.pop()
        self._generators = tuple(matrices)

    @property
    def identity(self) -> IntMatrix:
        return tuple(tuple(int(i == j) for j in range(self.size)) for i in range(self.size))

    @property
    def generators(self) -> Tuple[IntMatrix, ...]:
        return self._generators

    def mul(self, a: IntMatrix, b: IntMatrix) -> IntMatrix:
        columns = list(zip(*b))
        return tuple(tuple(sum(x * y for x, y in zip(row, column)) for column in columns) for row in a)

    def inv(self, a: IntMatrix) -> IntMatrix:
        # determinant one, so the adjugate is the inverse
        return _integer_inverse(a)


class ProductGroup(GroupOracle):
    """Direct product; elements are tuples of factor elements."""

    def __init__(self, factors: Sequence[GroupOracle]) -> None:
        if len(factors) < 2:
            raise InputError("a product needs at least two factors")
        self.factors = tuple(factors)
        self.name = "x".join(factor.name for factor in self.factors)
        self.note = "; ".join(factor.note for factor in self.factors if factor.note)

    @property
    def identity(self) -> Tuple:
        return tuple(factor.identity for factor in self.factors)

    @property
    def generators(self) -> Tuple[Tuple, ...]:
        gens: List[Tuple] = []
        for position, factor in enumerate(self.factors):
            for g in factor.generators:
                element = list(self.identity)
                element[position] = g
                gens.append(tuple(element))
        return tuple(gens)

    def mul(self, a: Tuple, b: Tuple) -> Tuple:
        return tuple(factor.mul(x, y) for factor, x, y in zip(self.factors, a, b))

    def inv(self, a: Tuple) -> Tuple:
        return tuple(factor.inv(x) for factor, x in zip(self.factors, a))


def elementary_matrix(size: int, i: int, j: int, value: int = 1) -> IntMatrix:
    return tuple(tuple(int(r == c) + (value if (r, c) == (i, j) else 0) for c in range(size)) for r in range(size))


def sl2z() -> MatrixGroup:
    return MatrixGroup("SL2Z", [((0, -1), (1, 0)), ((1, 1), (0, 1))], note="SL(2,Z) generated by S and T")


def sl3z() -> MatrixGroup:
    gens = [elementary_matrix(3, i, j) for i in range(3) for j in range(3) if i != j]
    return MatrixGroup("SL3Z", gens, note=SL3Z_GENERATOR_NOTE)


def sl2z_free_pair() -> MatrixGroup:
    return MatrixGroup("SL2Z:A,B", [MATRIX_A, MATRIX_B], note="subgroup of SL(2,Z) generated by A=[[1,2],[0,1]], B=[[1,0],[2,1]]")


def _single_oracle(token: str) -> GroupOracle:
    if token == "SL2Z":
        return sl2z()
    if token == "SL3Z":
        return sl3z()
    if token == "SL2Z:A,B":
        return sl2z_free_pair()
    if token[:1] == "F" and token[1:].isdigit():
        return FreeGroup(int(token[1:]))
    if token[:1] == "Z" and token[1:].isdigit():
        return LatticeGroup(int(token[1:]))
    raise InputError(f"unknown group oracle {token!r} (expected F<n>, Z<d>, SL2Z, SL3Z or SL2Z:A,B)")


def oracle_by_name(name: str) -> GroupOracle:
    """Parse 'F2', 'Z3', 'SL2Z', 'SL3Z', 'SL2Z:A,B' and products such as 'F2xZ1'."""
    tokens = [token.strip() for token in name.split("x")]
    if not tokens or any(not token for token in tokens):
        raise InputError(f"cannot parse group oracle name {name!r}")
    oracles = [_single_oracle(token) for token in tokens]
    return oracles[0] if len(oracles) == 1 else ProductGroup(oracles)

"""Dataclasses for ITPFI specifications and T-set verdicts."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Tuple

import pandas as pd

from ..common.errors import InputError
from ..common.numbers import parse_weight

Eigenvalues = Tuple[float, ...]

EIGENVALUE_SUM_TOL = 1e-12

CONSTANT = "constant"
PERIODIC = "periodic"
EXPLICIT = "explicit"

IN = "In"
OUT = "Out"
UNDECIDED = "Undecided"


def eigenvalue_list(values: Iterable[object]) -> Eigenvalues:
    """Parse one state's eigenvalues; they must be positive and sum to 1."""
    parsed = tuple(float(parse_weight(v)) for v in values)
    if not parsed:
        raise InputError("eigenvalue list is empty")
    if any(not math.isfinite(a) or a <= 0 for a in parsed):
        raise InputError(f"eigenvalues must be positive, got {list(parsed)}")
    if abs(math.fsum(parsed) - 1.0) > EIGENVALUE_SUM_TOL:
        raise InputError(f"eigenvalues must sum to 1, got {math.fsum(parsed)!r}")
    return parsed


@dataclass(frozen=True)
class ITPFISpec:
    """Eigenvalue lists α^(i) of the product state, one per tensor factor.

    ``constant`` repeats ``cycle[0]``; ``periodic`` runs ``prefix`` then repeats
    ``cycle``; ``explicit`` is the finite list ``prefix`` and nothing more.
    """

    kind: str
    prefix: Tuple[Eigenvalues, ...] = ()
    cycle: Tuple[Eigenvalues, ...] = ()
    name: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        if self.kind not in (CONSTANT, PERIODIC, EXPLICIT):
            raise InputError(f"unknown spec kind '{self.kind}'")
        if self.kind == CONSTANT and (self.prefix or len(self.cycle) != 1):
            raise InputError("a constant spec has exactly one eigenvalue list")
        if self.kind == PERIODIC and not self.cycle:
            raise InputError("a periodic spec needs a non-empty cycle")
        if self.kind == EXPLICIT and self.cycle:
            raise InputError("an explicit spec has no cycle")

    @property
    def finitely_described(self) -> bool:
        return self.kind != EXPLICIT

    @property
    def length(self) -> Optional[int]:
        """Number of factors, or None for infinite specs."""
        return len(self.prefix) if self.kind == EXPLICIT else None

    @property
    def block(self) -> Tuple[Eigenvalues, ...]:
        """The repeating block; empty for explicit specs."""
        return self.cycle

    def eigenvalues(self, i: int) -> Eigenvalues:
        if i < 0:
            raise InputError(f"factor index must be non-negative, got {i}")
        if i < len(self.prefix):
            return self.prefix[i]
        if self.kind == EXPLICIT:
            raise InputError(f"explicit spec has {len(self.prefix)} factors; index {i} is out of range")
        return self.cycle[(i - len(self.prefix)) % len(self.cycle)]

    def powers_ratio(self) -> Optional[float]:
        """λ when the spec is a constant two-eigenvalue state, else None."""
        if self.kind != CONSTANT or len(self.cycle[0]) != 2:
            return None
        low, high = sorted(self.cycle[0])
        return low / high if low < high else None

    def as_dict(self) -> Dict:
        payload: Dict = {"kind": self.kind}
        if self.kind == CONSTANT:
            payload["eigenvalues"] = list(self.cycle[0])
        elif self.kind == PERIODIC:
            payload["prefix"] = [list(a) for a in self.prefix]
            payload["cycle"] = [list(a) for a in self.cycle]
        else:
            payload["factors"] = [list(a) for a in self.prefix]
        return payload


@dataclass(frozen=True)
class TsetVerdict:
    """In, Out, or Undecided with the partial sum over the terms that were evaluated."""

    status: str
    max_block_term: float
    partial_sum: Optional[float] = None
    terms: Optional[int] = None

    @property
    def is_in(self) -> bool:
        return self.status == IN

    def __str__(self) -> str:
        return self.status

    def as_dict(self) -> Dict:
        payload: Dict = {"verdict": self.status, "maxBlockTerm": self.max_block_term}
        if self.status == UNDECIDED:
            payload["partialSum"] = self.partial_sum
            payload["terms"] = self.terms
        return payload


@dataclass(frozen=True)
class TsetRow:
    t: float
    verdict: TsetVerdict


@dataclass
class TsetTable:
    spec: ITPFISpec
    rows: List[TsetRow] = field(default_factory=list)

    def verdicts(self) -> List[str]:
        return [row.verdict.status for row in self.rows]

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            {
                "t": [row.t for row in self.rows],
                "verdict": [row.verdict.status for row in self.rows],
                "maxBlockTerm": [row.verdict.max_block_term for row in self.rows],
            },
            columns=["t", "verdict", "maxBlockTerm"],
        )

    def members(self) -> List[float]:
        return [row.t for row in self.rows if row.verdict.is_in]

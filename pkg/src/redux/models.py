"""Dataclasses for eventually periodic bit sequences and reduction reports."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Dict, List

from ..common.errors import InputError

E_SIDE = "E-side"
F_SIDE = "F-side"

_BITS = re.compile(r"^[01]*$")
_TEXT = re.compile(r"^([01]*)\(([01]+)\)$")


@dataclass(frozen=True)
class EventuallyPeriodicBits:
    """prefix · period · period · …, written as ``prefix(period)``."""

    prefix: str
    period: str

    def __post_init__(self) -> None:
        if not _BITS.match(self.prefix) or not _BITS.match(self.period):
            raise InputError(f"bit strings may only contain 0 and 1, got {self.prefix!r}, {self.period!r}")
        if not self.period:
            raise InputError("period must be non-empty")

    @classmethod
    def parse(cls, text: str) -> "EventuallyPeriodicBits":
        match = _TEXT.match(text.strip())
        if match is None:
            raise InputError(f"expected 'prefix(period)', got {text!r}")
        return cls(match.group(1), match.group(2))

    def bit(self, i: int) -> str:
        if i < len(self.prefix):
            return self.prefix[i]
        return self.period[(i - len(self.prefix)) % len(self.period)]

    def window(self, start: int, length: int) -> str:
        return "".join(self.bit(i) for i in range(start, start + length))

    def __str__(self) -> str:
        return f"{self.prefix}({self.period})"


@dataclass(frozen=True)
class Counterexample:
    first: str
    second: str
    side: str

    def as_dict(self) -> Dict[str, str]:
        return {"first": self.first, "second": self.second, "side": self.side}


@dataclass
class ReductionReport:
    """Outcome of checking x E y ⟺ f(x) F f(y) over every unordered sample pair.

    E-side: x E y but not f(x) F f(y). F-side: f(x) F f(y) but not x E y.
    ``failures`` counts every failing pair; ``counterexamples`` keeps the first few.
    """

    name: str
    pairs: int = 0
    failures: int = 0
    counterexamples: List[Counterexample] = field(default_factory=list)
    asserted: bool = True

    @property
    def holds(self) -> bool:
        return self.failures == 0

    def sides(self) -> Dict[str, int]:
        counts = {E_SIDE: 0, F_SIDE: 0}
        for example in self.counterexamples:
            counts[example.side] += 1
        return counts

    def as_dict(self) -> Dict:
        return {
            "harness": self.name,
            "holds": self.holds,
            "asserted": self.asserted,
            "pairs": self.pairs,
            "failures": self.failures,
            "counterexamples": [c.as_dict() for c in self.counterexamples],
        }

"""Result types for group von Neumann algebra checks."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Tuple

ICC_EVIDENCE = (
    "A pass is finite evidence of infinite conjugacy classes, never a proof; "
    "a fail whose count stays fixed as R grows is evidence of a finite class."
)


@dataclass(frozen=True)
class ICCCertificate:
    """Smallest conjugacy-class count seen from Ball(r)\\{e} when conjugating by Ball(R)."""

    group: str
    radius: int
    conjugator_radius: int
    min_conjugates: int
    threshold: int
    witness: str = ""
    generator_note: str = ""

    @property
    def passed(self) -> bool:
        return self.min_conjugates >= self.threshold

    def as_dict(self) -> Dict:
        payload = {
            "group": self.group,
            "r": self.radius,
            "R": self.conjugator_radius,
            "minConjugates": self.min_conjugates,
            "threshold": self.threshold,
            "pass": self.passed,
            "witness": self.witness,
            "evidence": ICC_EVIDENCE,
        }
        if self.generator_note:
            payload["generators"] = self.generator_note
        return payload


@dataclass(frozen=True)
class FreeSubgroupWitness:
    """Ball size against the reduced-word count of a free group of the same rank."""

    group: str
    radius: int
    ball_size: int
    reduced_words: int

    @property
    def free_up_to_radius(self) -> bool:
        return self.ball_size == self.reduced_words

    def as_dict(self) -> Dict:
        return {
            "group": self.group,
            "radius": self.radius,
            "ballSize": self.ball_size,
            "reducedWords": self.reduced_words,
            "freeUpToRadius": self.free_up_to_radius,
        }


@dataclass(frozen=True)
class RegularBlockCheck:
    group: str
    order: int
    class_count: int
    center_dim: int
    blocks: Tuple[Tuple[int, float], ...]

    @property
    def weights_match(self) -> bool:
        return all(abs(weight - size * size / self.order) < 1e-9 for size, weight in self.blocks)

    @property
    def passed(self) -> bool:
        return self.center_dim == self.class_count and self.weights_match

    def as_dict(self) -> Dict:
        return {
            "group": self.group,
            "order": self.order,
            "conjugacyClasses": self.class_count,
            "centerDim": self.center_dim,
            "blocks": [{"size": size, "weight": weight} for size, weight in self.blocks],
            "pass": self.passed,
        }

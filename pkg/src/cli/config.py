"""Per-invocation settings validated with pydantic and turned into a LabConfig."""

from __future__ import annotations

from dataclasses import fields
from pathlib import Path
from typing import Dict, List, Literal, Optional

from pydantic import BaseModel, Field, ValidationError, field_validator

from ..common.config import Caps, LabConfig
from ..common.errors import InputError

KNOWN_CAPS = frozenset(f.name for f in fields(Caps))


class RunConfig(BaseModel):
    command: str
    inputs: List[Path] = Field(default_factory=list)
    output: Optional[Path] = None
    format: Optional[Literal["json", "csv"]] = None
    tol: Optional[float] = Field(default=None, gt=0, le=1e-3)
    seed: Optional[int] = None
    caps: Dict[str, int] = Field(default_factory=dict)
    progress: bool = False

    @field_validator("caps", mode="before")
    @classmethod
    def _parse_caps(cls, value: object) -> object:
        if value is None:
            return {}
        if not isinstance(value, str):
            return value
        parsed: Dict[str, str] = {}
        for chunk in value.split(","):
            if not chunk.strip():
                continue
            key, sep, raw = chunk.partition("=")
            if not sep:
                raise ValueError(f"expected key=value, got '{chunk.strip()}'")
            parsed[key.strip()] = raw.strip()
        return parsed

    @field_validator("caps")
    @classmethod
    def _known_positive_caps(cls, value: Dict[str, int]) -> Dict[str, int]:
        for key, limit in value.items():
            if key not in KNOWN_CAPS:
                raise ValueError(f"unknown cap '{key}' (known: {', '.join(sorted(KNOWN_CAPS))})")
            if limit <= 0:
                raise ValueError(f"cap '{key}' must be positive, got {limit}")
        return value

    def output_format(self, default: str = "json") -> str:
        if self.format:
            return self.format
        if self.output is not None and self.output.suffix.lower() == ".csv":
            return "csv"
        return default

    def lab_config(self) -> LabConfig:
        config = LabConfig()
        changes: Dict[str, object] = {"progress": self.progress or config.progress}
        if self.tol is not None:
            changes["tol"] = self.tol
        if self.seed is not None:
            changes["seed"] = self.seed
        config = config.with_overrides(**changes)
        return config.with_caps(**self.caps) if self.caps else config


def build_run_config(**values: object) -> RunConfig:
    try:
        return RunConfig(**values)
    except ValidationError as exc:
        first = exc.errors()[0]
        location = ".".join(str(part) for part in first.get("loc", ()))
        raise InputError(f"invalid option '{location}': {first.get('msg')}") from exc

"""
Runtime configuration shared by every module (tolerances, caps, seed).
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field, fields, replace
from typing import Dict

from .errors import InputError


def _env_int(var_name: str, default: int) -> int:
    """Read integer configuration from environment variables."""
    try:
        return int(os.getenv(var_name, default))
    except (TypeError, ValueError):
        return default


def _env_float(var_name: str, default: float) -> float:
    try:
        return float(os.getenv(var_name, default))
    except (TypeError, ValueError):
        return default


def _env_bool(var_name: str, default: bool) -> bool:
    value = os.getenv(var_name)
    if value is None:
        return default
    return value.strip().lower() in {"1", "true", "yes", "on"}


@dataclass(slots=True)
class Caps:
    """Desk-scale size limits. Every field may be overridden through VNLAB_CAPS."""

    bernoulli_atoms: int = 4096
    torus_group: int = 100_000
    crossed_dim: int = 512
    regular_group: int = 256
    ball_size: int = 1_000_000
    group_order: int = 100_000
    fingerprint_space: int = 3**12
    graph_iso_vertices: int = 8
    exact_iso_vertices: int = 4
    copies_vertices: int = 64
    semidirect_order: int = 1_000_000
    commutant_dim: int = 24
    spectrum_size: int = 100_000

    @classmethod
    def parse(cls, text: str | None, base: "Caps | None" = None) -> "Caps":
        """Apply a ``key=value,key=value`` override string on top of ``base``."""
        caps = base or cls()
        if not text or not text.strip():
            return caps
        known = {f.name for f in fields(cls)}
        updates: Dict[str, int] = {}
        for chunk in text.split(","):
            if not chunk.strip():
                continue
            key, sep, raw = chunk.partition("=")
            key = key.strip()
            if not sep or key not in known:
                raise InputError(f"unknown cap override '{chunk.strip()}' (known: {', '.join(sorted(known))})")
            try:
                value = int(raw.strip())
            except ValueError as exc:
                raise InputError(f"cap '{key}' must be an integer, got '{raw.strip()}'") from exc
            if value <= 0:
                raise InputError(f"cap '{key}' must be positive, got {value}")
            updates[key] = value
        return replace(caps, **updates)


@dataclass(slots=True)
class LabConfig:
    """Tolerances, seeds and caps for one run."""

    tol: float = field(default_factory=lambda: _env_float("VNLAB_TOL", 1e-9))
    seed: int = field(default_factory=lambda: _env_int("VNLAB_SEED", 20240611))
    redraw_attempts: int = field(default_factory=lambda: _env_int("VNLAB_REDRAW_ATTEMPTS", 16))
    zero_tol: float = field(default_factory=lambda: _env_float("VNLAB_ZERO_TOL", 1e-12))
    max_terms: int = field(default_factory=lambda: _env_int("VNLAB_MAX_TERMS", 100_000))
    max_counterexamples: int = field(default_factory=lambda: _env_int("VNLAB_MAX_COUNTEREXAMPLES", 32))
    progress: bool = field(default_factory=lambda: _env_bool("VNLAB_PROGRESS", False))
    caps: Caps = field(default_factory=lambda: Caps.parse(os.getenv("VNLAB_CAPS")))

    def __post_init__(self) -> None:
        if not 0 < self.tol < 1:
            raise InputError(f"tolerance must lie in (0, 1), got {self.tol}")
        if self.redraw_attempts < 1:
            raise InputError("redraw_attempts must be at least 1")

    def with_overrides(self, **changes) -> "LabConfig":
        """Return a copy with the given fields replaced."""
        return replace(self, **changes)

    def with_caps(self, **changes: int) -> "LabConfig":
        return replace(self, caps=replace(self.caps, **changes))


DEFAULT_CONFIG = LabConfig()


def default_config() -> LabConfig:
    """Fresh configuration read from the current environment."""
    return LabConfig()

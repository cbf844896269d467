"""Helpers for exact weights (Fractions) and float fallbacks."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, List, Sequence, Union

from .errors import InputError

Weight = Union[Fraction, float]

# rounding used when float weights enter hashable signatures
SIGNATURE_DIGITS = 12


def parse_weight(value: object) -> Weight:
    """Accept ints, Fractions, "p/q" strings and floats; keep exact values exact."""
    if isinstance(value, bool):
        raise InputError(f"weight must be numeric, got {value!r}")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, float):
        return value
    if isinstance(value, str):
        text = value.strip()
        try:
            if "." in text or "e" in text.lower():
                return float(text)
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"cannot parse weight {value!r}") from exc
    raise InputError(f"weight must be numeric, got {value!r}")


def normalize_weights(values: Iterable[object]) -> List[Weight]:
    """Parse weights; if any is a float, all become floats."""
    parsed = [parse_weight(v) for v in values]
    if any(isinstance(w, float) for w in parsed):
        return [float(w) for w in parsed]
    return parsed


def weights_sum_to_one(weights: Sequence[Weight], tol: float) -> bool:
    total = sum(weights)
    if all(isinstance(w, Fraction) for w in weights):
        return total == 1
    return abs(float(total) - 1.0) <= tol


def signature_key(weight: Weight) -> Weight:
    """Hashable, comparable form of a weight."""
    if isinstance(weight, Fraction):
        return weight
    return round(float(weight), SIGNATURE_DIGITS)

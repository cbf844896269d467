"""
Eventual equality on eventually periodic bit sequences.

Past index max(|prefix₁|, |prefix₂|) both sequences are periodic, and their pointwise
agreement repeats with period lcm(|period₁|, |period₂|); one window decides.
"""

from __future__ import annotations

import itertools
import math
from typing import List

from .models import EventuallyPeriodicBits


def e0_equivalent(first: EventuallyPeriodicBits, second: EventuallyPeriodicBits) -> bool:
    start = max(len(first.prefix), len(second.prefix))
    width = math.lcm(len(first.period), len(second.period))
    return first.window(start, width) == second.window(start, width)


def _words(lengths) -> List[str]:
    return ["".join(bits) for n in lengths for bits in itertools.product("01", repeat=n)]


def all_bits(max_prefix: int, max_period: int) -> List[EventuallyPeriodicBits]:
    """Every (prefix, period) pair with |prefix| ≤ max_prefix and 1 ≤ |period| ≤ max_period."""
    return [
        EventuallyPeriodicBits(prefix, period)
        for prefix in _words(range(max_prefix + 1))
        for period in _words(range(1, max_period + 1))
    ]


def unroll(bits: EventuallyPeriodicBits, steps: int) -> EventuallyPeriodicBits:
    """Same sequence with ``steps`` more bits moved into the prefix (the period rotates)."""
    cut = len(bits.prefix) + steps
    return EventuallyPeriodicBits(bits.window(0, cut), bits.window(cut, len(bits.period)))


def repeat_period(bits: EventuallyPeriodicBits, times: int) -> EventuallyPeriodicBits:
    return EventuallyPeriodicBits(bits.prefix, bits.period * times)


def same_sequence(first: EventuallyPeriodicBits, second: EventuallyPeriodicBits) -> bool:
    """Pointwise equality, prefix included."""
    start = max(len(first.prefix), len(second.prefix))
    width = math.lcm(len(first.period), len(second.period))
    return first.window(0, start + width) == second.window(0, start + width)

"""Decidable E₀ and finite checks of reductions between the other modules."""

from .e0 import all_bits, e0_equivalent, repeat_period, same_sequence, unroll
from .harness import (
    E0_GRID,
    E0_LAMBDAS,
    HARNESSES,
    Harness,
    bits_to_spec,
    harness_names,
    run_harness,
    tset_signature,
    verify_reduction,
)
from .models import E_SIDE, F_SIDE, Counterexample, EventuallyPeriodicBits, ReductionReport

__all__ = [
    "EventuallyPeriodicBits",
    "Counterexample",
    "ReductionReport",
    "E_SIDE",
    "F_SIDE",
    "e0_equivalent",
    "all_bits",
    "unroll",
    "repeat_period",
    "same_sequence",
    "verify_reduction",
    "Harness",
    "HARNESSES",
    "E0_LAMBDAS",
    "E0_GRID",
    "bits_to_spec",
    "tset_signature",
    "harness_names",
    "run_harness",
]

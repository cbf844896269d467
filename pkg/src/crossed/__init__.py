"""Group-measure space construction for finite actions."""

from .construction import (
    cartan_invariant,
    cartan_report,
    crossed_product,
    crossed_summary,
    feldman_moore_check,
    free_block_check,
    normalizer_dense,
    verify_relations,
    verify_trace,
)
from .models import CartanReport, CrossedProduct, CrossedSummary, FeldmanMooreResult, RelationCheck

__all__ = [
    "CrossedProduct",
    "CartanReport",
    "CrossedSummary",
    "FeldmanMooreResult",
    "RelationCheck",
    "crossed_product",
    "cartan_report",
    "cartan_invariant",
    "normalizer_dense",
    "feldman_moore_check",
    "free_block_check",
    "verify_relations",
    "verify_trace",
    "crossed_summary",
]
